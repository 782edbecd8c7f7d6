"""Microscopic many-body dispersion energies and their sphere-sphere sums.

The macroscopic two-sphere coefficient can be rebuilt molecule by
molecule: pairwise van der Waals terms sum to the Hamaker coefficient,
and the leading medium correction is the Axilrod-Teller triplet with one
molecule in each sphere and one in the medium.  These routines provide
that microscopic side of the comparison, in the dilute regime where
chi = eta * alpha / eps0 for every constituent.
"""

import numpy as np

from .constants import EPS0, HBAR
from .materials import clausius_mossotti_dilute
from .quadrature import integrate_semiinfinite, require_product_decay

__all__ = [
    "ChiTriple",
    "TripletGeometry",
    "vdw_pair",
    "at_kernel",
    "axilrod_teller",
    "c6_hamaker",
    "c6_threeparticle",
    "species_chi_triple",
]

VDW_PREFACTOR = -3.0 * HBAR / (16.0 * np.pi ** 3 * EPS0 ** 2)
AT_PREFACTOR = 3.0 * HBAR / (64.0 * np.pi ** 4 * EPS0 ** 3)


class ChiTriple:
    """Reduced susceptibilities (chi1, chi2, chi_medium) at one frequency.

    Values may be scalars or arrays over a frequency grid; each must be
    >= 0.
    """

    __slots__ = ("chi1", "chi2", "chi_medium")

    def __init__(self, chi1, chi2, chi_medium):
        for name, value in (("chi1", chi1), ("chi2", chi2), ("chi_medium", chi_medium)):
            if np.any(np.asarray(value) < 0.0):
                raise ValueError(f"{name} must be >= 0")
        self.chi1 = chi1
        self.chi2 = chi2
        self.chi_medium = chi_medium


class TripletGeometry:
    """Three distinct molecular positions (m)."""

    __slots__ = ("r1", "r2", "r3")

    def __init__(self, r1, r2, r3):
        self.r1 = np.asarray(r1, dtype=float)
        self.r2 = np.asarray(r2, dtype=float)
        self.r3 = np.asarray(r3, dtype=float)
        for v in (self.r1, self.r2, self.r3):
            if v.shape != (3,):
                raise ValueError("positions must be 3-vectors")
        if (np.array_equal(self.r1, self.r2) or np.array_equal(self.r2, self.r3)
                or np.array_equal(self.r3, self.r1)):
            raise ValueError("triplet positions must be pairwise distinct")

    def scaled(self, factor):
        return TripletGeometry(factor * self.r1, factor * self.r2, factor * self.r3)


def vdw_pair(alpha1, alpha2, distance, quad):
    """Van der Waals energy of two molecules in vacuum (J).

    U = -(3 hbar / 16 pi^3 eps0^2) * int alpha1 alpha2 dxi / distance^6.
    """
    if not distance > 0.0:
        raise ValueError("distance must be > 0")
    product = lambda xi: alpha1(xi) * alpha2(xi)
    require_product_decay(product, quad)
    integral, _ = integrate_semiinfinite(product, quad)
    return VDW_PREFACTOR * integral / distance ** 6


def at_kernel(geometry):
    """Triple-dipole geometric factor (1/m^9).

    (1 + 3 cos t1 cos t2 cos t3) / (d12^3 d23^3 d31^3) with the interior
    angles of the triangle spanned by the three points; symmetric under
    any relabelling of the vertices.
    """
    u12 = geometry.r2 - geometry.r1
    u13 = geometry.r3 - geometry.r1
    u23 = geometry.r3 - geometry.r2
    d12 = np.linalg.norm(u12)
    d13 = np.linalg.norm(u13)
    d23 = np.linalg.norm(u23)
    cos1 = np.dot(u12, u13) / (d12 * d13)
    cos2 = np.dot(-u12, u23) / (d12 * d23)
    cos3 = np.dot(-u13, -u23) / (d13 * d23)
    return (1.0 + 3.0 * cos1 * cos2 * cos3) / (d12 ** 3 * d23 ** 3 * d13 ** 3)


def axilrod_teller(alpha1, alpha2, alpha3, geometry, quad):
    """Triple-dipole dispersion energy of three molecules (J).

    (3 hbar / 64 pi^4 eps0^3) * int alpha1 alpha2 alpha3 dxi times the
    geometric kernel; positive (repulsive) for an equilateral triangle of
    identical molecules.
    """
    product = lambda xi: alpha1(xi) * alpha2(xi) * alpha3(xi)
    require_product_decay(product, quad)
    integral, _ = integrate_semiinfinite(product, quad)
    return AT_PREFACTOR * integral * at_kernel(geometry)


def c6_hamaker(chis, radius1, radius2, quad):
    """Pairwise-summation C6 of two dilute spheres in a dilute medium (J m^6).

    -(hbar R1^3 R2^3 / 3 pi) * int (chi1 - chi)(chi2 - chi) dxi.  Depends
    on the constituents only through the excess susceptibilities
    chi_i - chi; it vanishes when both spheres match the medium.

    Parameters
    ----------
    chis : callable
        xi -> ChiTriple, vectorized over xi.
    """
    def integrand(xi):
        t = chis(xi)
        return (t.chi1 - t.chi_medium) * (t.chi2 - t.chi_medium)

    require_product_decay(integrand, quad, "excess susceptibility product")
    integral, _ = integrate_semiinfinite(integrand, quad)
    return -HBAR * radius1 ** 3 * radius2 ** 3 / (3.0 * np.pi) * integral


def c6_threeparticle(chis, radius1, radius2, quad):
    """Medium-mediated triplet contribution to C6 (J m^6).

    +(2 hbar R1^3 R2^3 / 9 pi) * int chi1 chi2 chi dxi.  Positive
    whenever all three susceptibilities are positive somewhere on the
    axis: the surrounding medium weakens the two-sphere attraction.
    """
    def integrand(xi):
        t = chis(xi)
        return t.chi1 * t.chi2 * t.chi_medium

    require_product_decay(integrand, quad, "susceptibility triple product")
    integral, _ = integrate_semiinfinite(integrand, quad)
    return 2.0 * HBAR * radius1 ** 3 * radius2 ** 3 / (9.0 * np.pi) * integral


def species_chi_triple(species1, species2, species_medium):
    """ChiTriple-valued integrand from three molecular species."""
    def chis(xi):
        return ChiTriple(clausius_mossotti_dilute(species1, xi),
                         clausius_mossotti_dilute(species2, xi),
                         clausius_mossotti_dilute(species_medium, xi))
    return chis
