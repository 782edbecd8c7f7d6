"""Excess dipole polarisabilities of a small sphere embedded in a medium.

A sphere that matches the medium has zero excess polarisability and feels
no dispersion force; like excesses (both above or both below the medium)
attract.
"""

import numpy as np

from .constants import EPS0, MU0

__all__ = [
    "SphereSpec",
    "MediumSpec",
    "excess_alpha",
    "excess_beta",
    "alpha_excess_values",
    "beta_excess_values",
]


class MediumSpec:
    """Homogeneous background medium: electric and magnetic response."""

    __slots__ = ("permittivity", "permeability")

    def __init__(self, permittivity, permeability):
        self.permittivity = permittivity
        self.permeability = permeability


class SphereSpec:
    """Small sphere: radius plus electric and magnetic response.

    Parameters
    ----------
    radius : float
        Sphere radius R > 0 (m).
    permittivity, permeability : ResponseFunction
    """

    __slots__ = ("radius", "permittivity", "permeability")

    def __init__(self, radius, permittivity, permeability):
        if not radius > 0.0:
            raise ValueError("sphere radius must be > 0")
        self.radius = float(radius)
        self.permittivity = permittivity
        self.permeability = permeability


def alpha_excess_values(eps_sphere, eps_medium, radius):
    """Electric excess polarisability from already-evaluated response values.

    alpha* = 4 pi eps0 eps R^3 (eps1 - eps) / (eps1 + 2 eps), in C m^2/V.
    The denominator stays positive for any response values >= 1, and the
    result vanishes identically when sphere and medium match.
    """
    return (4.0 * np.pi * EPS0 * eps_medium * radius ** 3
            * (eps_sphere - eps_medium) / (eps_sphere + 2.0 * eps_medium))


def beta_excess_values(mu_sphere, mu_medium, radius):
    """Magnetic excess polarisability from already-evaluated response values.

    beta* = (4 pi R^3 / (mu0 mu)) (mu1 - mu) / (mu1 + 2 mu).
    """
    return (4.0 * np.pi * radius ** 3 / (MU0 * mu_medium)
            * (mu_sphere - mu_medium) / (mu_sphere + 2.0 * mu_medium))


def excess_alpha(sphere, medium, xi):
    """Electric excess dipole polarisability of the sphere at i*xi."""
    return alpha_excess_values(sphere.permittivity(xi), medium.permittivity(xi),
                               sphere.radius)


def excess_beta(sphere, medium, xi):
    """Magnetic excess dipole polarisability of the sphere at i*xi."""
    return beta_excess_values(sphere.permeability(xi), medium.permeability(xi),
                              sphere.radius)
