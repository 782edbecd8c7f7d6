"""Two-sphere C6 and sphere-mirror C3 dispersion coefficients.

The non-retarded interaction of two small spheres in a homogeneous
magneto-dielectric medium is U(r12) = C6 / r12^6; for a small sphere in
front of a perfectly reflecting surface it is U(z) = C3 / z^3.  Both
coefficients are imaginary-frequency integrals over products of excess
polarisabilities, screened by powers of the medium response.  The
Abraham and Maxwell stress-tensor prescriptions differ only in those
powers; comparing them is the whole point of this package.
"""

import enum

import numpy as np

from .constants import EPS0, HBAR, MU0
from .polarisability import (MediumSpec, SphereSpec, alpha_excess_values,
                             beta_excess_values)
from .quadrature import integrate_semiinfinite, require_response_decay

__all__ = [
    "StressChoice",
    "C6Breakdown",
    "TwoSphereSystem",
    "c6_integrand",
    "c6_integrand_terms",
    "c6",
    "c6_from_polarisabilities",
    "c3_integrand",
    "c3",
    "potential",
    "force",
    "duality_transform",
]

C6_PREFACTOR = -3.0 * HBAR / (16.0 * np.pi ** 3)
C3_PREFACTOR = -HBAR / (16.0 * np.pi ** 2)


class StressChoice(enum.Enum):
    """Stress-tensor prescription for the zero-point momentum flux."""

    ABRAHAM = "abraham"
    MAXWELL = "maxwell"

    @property
    def c6_medium_power(self):
        """Exponent of the medium response in the two-sphere integrand."""
        return 2 if self is StressChoice.ABRAHAM else 3

    @property
    def c3_medium_power(self):
        """Exponent of the medium response in the sphere-mirror integrand."""
        return 1 if self is StressChoice.ABRAHAM else 2


class C6Breakdown:
    """Electric and magnetic contributions to one C6 coefficient.

    ``total`` is electric_term + magnetic_term by construction.  Both
    terms and the quadrature error estimate are in J m^6.
    """

    __slots__ = ("electric_term", "magnetic_term", "quadrature_error_estimate")

    def __init__(self, electric_term, magnetic_term, quadrature_error_estimate):
        self.electric_term = float(electric_term)
        self.magnetic_term = float(magnetic_term)
        self.quadrature_error_estimate = float(quadrature_error_estimate)

    @property
    def total(self):
        return self.electric_term + self.magnetic_term

    def __repr__(self):
        return (f"C6Breakdown(electric={self.electric_term:.6e}, "
                f"magnetic={self.magnetic_term:.6e}, total={self.total:.6e}, "
                f"quad_err={self.quadrature_error_estimate:.2e})")


class TwoSphereSystem:
    """Two small spheres in a homogeneous medium.

    Parameters
    ----------
    sphere1, sphere2 : SphereSpec
    medium : MediumSpec
    separation : float
        Centre-to-centre distance r12 > R1 + R2 (m).
    """

    __slots__ = ("sphere1", "sphere2", "medium", "separation")

    def __init__(self, sphere1, sphere2, medium, separation):
        if not separation > sphere1.radius + sphere2.radius:
            raise ValueError("separation must exceed the sum of the radii")
        self.sphere1 = sphere1
        self.sphere2 = sphere2
        self.medium = medium
        self.separation = float(separation)


def _c6_terms_from_values(alpha1, alpha2, beta1, beta2, eps, mu, choice):
    # value-level kernel shared by the production path and the
    # susceptibility-expansion oracle
    p = choice.c6_medium_power
    electric = C6_PREFACTOR * alpha1 * alpha2 / (EPS0 ** 2 * eps ** p)
    magnetic = C6_PREFACTOR * MU0 ** 2 * mu ** p * beta1 * beta2
    return electric, magnetic


def c6_integrand_terms(sphere1, sphere2, medium, choice, xi):
    """Electric and magnetic parts of the C6 integrand at i*xi."""
    eps = medium.permittivity(xi)
    mu = medium.permeability(xi)
    a1 = alpha_excess_values(sphere1.permittivity(xi), eps, sphere1.radius)
    a2 = alpha_excess_values(sphere2.permittivity(xi), eps, sphere2.radius)
    b1 = beta_excess_values(sphere1.permeability(xi), mu, sphere1.radius)
    b2 = beta_excess_values(sphere2.permeability(xi), mu, sphere2.radius)
    return _c6_terms_from_values(a1, a2, b1, b2, eps, mu, choice)


def c6_integrand(sphere1, sphere2, medium, choice, xi):
    """Two-sphere C6 integrand at i*xi, in J m^6 s/rad.

    The medium response enters with power 2 (Abraham) or 3 (Maxwell); in
    vacuum the two prescriptions coincide pointwise.
    """
    electric, magnetic = c6_integrand_terms(sphere1, sphere2, medium, choice, xi)
    return electric + magnetic


def c6(system, choice, quad):
    """C6 coefficient of a two-sphere system for one stress choice.

    Integrates the electric and magnetic integrand parts separately over
    the imaginary axis and reports them in a C6Breakdown.  All six
    response functions must pass the decay gate, otherwise a
    DivergentIntegralError is raised before any quadrature runs.
    """
    s1, s2, med = system.sphere1, system.sphere2, system.medium
    require_response_decay(quad, med.permittivity, med.permeability,
                           s1.permittivity, s1.permeability,
                           s2.permittivity, s2.permeability)
    e_val, e_err = integrate_semiinfinite(
        lambda xi: c6_integrand_terms(s1, s2, med, choice, xi)[0], quad)
    m_val, m_err = integrate_semiinfinite(
        lambda xi: c6_integrand_terms(s1, s2, med, choice, xi)[1], quad)
    return C6Breakdown(e_val, m_val, e_err + m_err)


def c6_from_polarisabilities(alpha1, alpha2, medium, choice, quad,
                             beta1=None, beta2=None):
    """C6 for point particles with externally supplied polarisabilities.

    Same integrand structure as :func:`c6`, but with callables
    ``alpha(xi)`` (and optionally ``beta(xi)``) in place of sphere excess
    polarisabilities.  This is the point-particle limit used by the
    correspondence check against the molecular van der Waals potential.
    """
    require_response_decay(quad, medium.permittivity, medium.permeability)

    def electric(xi):
        eps = medium.permittivity(xi)
        term, _ = _c6_terms_from_values(alpha1(xi), alpha2(xi), 0.0, 0.0,
                                        eps, 1.0, choice)
        return term

    def magnetic(xi):
        mu = medium.permeability(xi)
        _, term = _c6_terms_from_values(0.0, 0.0, beta1(xi), beta2(xi),
                                        1.0, mu, choice)
        return term

    e_val, e_err = integrate_semiinfinite(electric, quad)
    if beta1 is None or beta2 is None:
        m_val, m_err = 0.0, 0.0
    else:
        m_val, m_err = integrate_semiinfinite(magnetic, quad)
    return C6Breakdown(e_val, m_val, e_err + m_err)


def c3_integrand(sphere, medium, choice, xi):
    """Sphere-mirror C3 integrand at i*xi, in J m^3 s/rad.

    The electric and magnetic excesses enter with opposite sign: a
    dielectric excess is attracted to the mirror, a magnetic excess is
    repelled.
    """
    eps = medium.permittivity(xi)
    mu = medium.permeability(xi)
    a = alpha_excess_values(sphere.permittivity(xi), eps, sphere.radius)
    b = beta_excess_values(sphere.permeability(xi), mu, sphere.radius)
    q = choice.c3_medium_power
    return C3_PREFACTOR * (a / (EPS0 * eps ** q) - MU0 * mu ** q * b)


def c3(sphere, medium, choice, quad):
    """C3 coefficient of a sphere before a perfect mirror.

    Returns
    -------
    (value, error_estimate) : (float, float), both J m^3
    """
    require_response_decay(quad, medium.permittivity, medium.permeability,
                           sphere.permittivity, sphere.permeability)
    return integrate_semiinfinite(
        lambda xi: c3_integrand(sphere, medium, choice, xi), quad)


def potential(c6_total, separation):
    """Dispersion potential U = C6 / r12^6 (J)."""
    if not separation > 0.0:
        raise ValueError("separation must be > 0")
    return c6_total / separation ** 6


def force(c6_total, separation):
    """Radial force F = -dU/dr = 6 C6 / r12^7 (N, negative = attraction)."""
    if not separation > 0.0:
        raise ValueError("separation must be > 0")
    return 6.0 * c6_total / separation ** 7


def _dual_sphere(sphere):
    return SphereSpec(sphere.radius, sphere.permeability, sphere.permittivity)


def duality_transform(system):
    """Exchange electric and magnetic response of medium and both spheres.

    An involution: applying it twice gives back the original system.  The
    Abraham C6 integrand is pointwise invariant under this exchange,
    the Maxwell integrand is not.
    """
    dual_medium = MediumSpec(system.medium.permeability, system.medium.permittivity)
    return TwoSphereSystem(_dual_sphere(system.sphere1),
                           _dual_sphere(system.sphere2),
                           dual_medium, system.separation)
