"""Independent numerical oracles for the dispersion coefficients.

Nothing in here reuses the closed-form coefficient formulas it checks:
the lattice sum rebuilds the Hamaker coefficient from raw pairwise r^-6
sums, the Monte Carlo routine integrates the triple-dipole kernel over
the medium volume, and the finite-difference expansion extracts the
susceptibility Taylor coefficients of the macroscopic integrand.  Every
oracle is a deterministic function of its inputs, seeds included.
"""

import numpy as np
from numba import njit

from .constants import HBAR
from .dispersion import _c6_terms_from_values
from .polarisability import alpha_excess_values
from .quadrature import (QuadratureSpec, integrate_semiinfinite,  # noqa: F401
                         suggest_scale)

__all__ = [
    "QuadratureSpec",
    "integrate_semiinfinite",
    "suggest_scale",
    "MonteCarloSpec",
    "ExpansionReport",
    "ConsistencyReport",
    "hamaker_lattice_sum",
    "at_medium_mc",
    "expand_c6_integrand",
    "verify_consistency",
    "HAMAKER_COEFF_SIGNS",
]


class MonteCarloSpec:
    """Sample budget, seed and chunking of a Monte Carlo run.

    Results are a deterministic function of (seed, samples, chunks): the
    chunk decomposition is fixed, each chunk draws from its own child
    seed, and the reduction order never changes.
    """

    __slots__ = ("samples", "seed", "chunks")

    def __init__(self, samples, seed=0, chunks=32):
        if samples < 1:
            raise ValueError("need at least one sample")
        if chunks < 1:
            raise ValueError("need at least one chunk")
        if chunks > samples:
            raise ValueError("more chunks than samples")
        self.samples = int(samples)
        self.seed = int(seed)
        self.chunks = int(chunks)


def _sphere_lattice(radius, pitch):
    # cell centres (k + 1/2) * pitch strictly inside the sphere; the
    # half-offset keeps centres off the boundary and the grid symmetric
    n = int(np.ceil(radius / pitch + 0.5))
    idx = (np.arange(-n, n) + 0.5) * pitch
    x, y, z = np.meshgrid(idx, idx, idx, indexing="ij")
    pts = np.column_stack([x.ravel(), y.ravel(), z.ravel()])
    return pts[np.einsum("ij,ij->i", pts, pts) < radius * radius]


def hamaker_lattice_sum(radius1, radius2, separation, pitch):
    """Discrete pairwise r^-6 sum between two sphere lattices.

    Each sphere is cut into cubic cells of volume pitch^3 (cell centre
    inside the sphere); the dimensionless sum
    G = sum_ij pitch^6 / |r_i - r_j|^6 over all cross pairs tends to
    V1 V2 / r12^6 for widely separated spheres.

    Raises ValueError when the pitch is coarser than min(R1, R2)/10 or
    the spheres overlap.
    """
    if not pitch <= min(radius1, radius2) / 10.0:
        raise ValueError("lattice pitch too coarse: need pitch <= min(R1, R2)/10")
    if not separation > radius1 + radius2:
        raise ValueError("separation must exceed the sum of the radii")
    cells1 = _sphere_lattice(radius1, pitch)
    cells2 = _sphere_lattice(radius2, pitch)
    cells2 = cells2 + np.array([separation, 0.0, 0.0])
    return pitch ** 6 * _pair_r6_sum(cells1, cells2)


@njit("float64(float64[:, :], float64[:, :])", cache=True)
def _pair_r6_sum(cells1, cells2):
    # serial double loop, fixed summation order for reproducibility
    total = 0.0
    for i in range(cells1.shape[0]):
        x, y, z = cells1[i, 0], cells1[i, 1], cells1[i, 2]
        for j in range(cells2.shape[0]):
            dx = x - cells2[j, 0]
            dy = y - cells2[j, 1]
            dz = z - cells2[j, 2]
            rsq = dx * dx + dy * dy + dz * dz
            total += 1.0 / (rsq * rsq * rsq)
    return total


def _mixture_radial_density(dist, r_min, r_max, log_fraction):
    # log-uniform on [r_min, r_max] plus an r^-4 tail beyond r_max
    log_span = np.log(r_max / r_min)
    p = np.zeros_like(dist)
    inside = (dist >= r_min) & (dist <= r_max)
    p[inside] = log_fraction / (dist[inside] * log_span)
    beyond = dist > r_max
    p[beyond] = (1.0 - log_fraction) * 3.0 * r_max ** 3 / dist[beyond] ** 4
    return p


def at_medium_mc(separation, radius1, radius2, mc):
    """Monte Carlo medium integral of the triple-dipole kernel.

    Estimates I = int d^3s (1 + 3 cos t1 cos t2 cos t3)
    / (r12^3 |s - r1|^3 |s - r2|^3) over all space minus the two sphere
    volumes, the fixed points being the sphere centres.  In the
    point-sphere limit I -> 8 pi / (3 r12^6).

    Importance sampling mixes two isotropic distributions centred on the
    spheres, log-uniform in radius out to 2 r12 with an r^-3-per-decade
    tail beyond, matching where the kernel lives.  Samples falling inside
    either sphere count as zero.

    Returns
    -------
    (estimate, standard_error) : (float, float), both 1/m^6
        The standard error comes from the spread of the chunk means; it
        is NaN for a single chunk.
    """
    if not (radius1 > 0.0 and radius2 > 0.0):
        raise ValueError("sphere radii must be > 0")
    if not separation > radius1 + radius2:
        raise ValueError("separation must exceed the sum of the radii")
    centre1 = np.array([0.0, 0.0, 0.0])
    centre2 = np.array([separation, 0.0, 0.0])
    r_min = min(radius1, radius2)
    r_max = 2.0 * separation
    log_fraction = 0.9
    log_span = np.log(r_max / r_min)

    sizes = [mc.samples // mc.chunks + (1 if i < mc.samples % mc.chunks else 0)
             for i in range(mc.chunks)]
    seeds = np.random.SeedSequence(mc.seed).spawn(mc.chunks)
    means = np.empty(mc.chunks)
    for i, (child, n) in enumerate(zip(seeds, sizes)):
        rng = np.random.default_rng(child)
        pick2 = rng.random(n) < 0.5
        tail = rng.random(n) >= log_fraction
        u = rng.random(n)
        radius = np.where(tail,
                          r_max * np.maximum(u, 1e-300) ** (-1.0 / 3.0),
                          r_min * np.exp(u * log_span))
        direction = rng.normal(size=(n, 3))
        direction /= np.linalg.norm(direction, axis=1)[:, None]
        s = np.where(pick2[:, None], centre2, centre1) + direction * radius[:, None]

        to1 = s - centre1
        to2 = s - centre2
        a = np.linalg.norm(to1, axis=1)
        b = np.linalg.norm(to2, axis=1)
        # mixture density at the sampled point, both components evaluated
        # about their own centre
        density = (0.5 * _mixture_radial_density(a, r_min, r_max, log_fraction)
                   / (4.0 * np.pi * a ** 2)
                   + 0.5 * _mixture_radial_density(b, r_min, r_max, log_fraction)
                   / (4.0 * np.pi * b ** 2))

        axis = centre2 - centre1
        cos1 = (to1 @ axis) / (a * separation)
        cos2 = -(to2 @ axis) / (b * separation)
        cos3 = np.einsum("ij,ij->i", to1, to2) / (a * b)
        kernel = (1.0 + 3.0 * cos1 * cos2 * cos3) / (separation ** 3 * a ** 3 * b ** 3)

        outside = (a > radius1) & (b > radius2)
        contrib = np.where(outside & (density > 0.0),
                           kernel / np.where(density > 0.0, density, 1.0), 0.0)
        means[i] = contrib.mean()

    weights = np.asarray(sizes, dtype=float) / mc.samples
    estimate = float(np.dot(weights, means))
    if mc.chunks < 2:
        return estimate, float("nan")
    spread = float(np.dot(weights ** 2, (means - estimate) ** 2))
    stderr = np.sqrt(spread * mc.chunks / (mc.chunks - 1))
    return estimate, float(stderr)


class ExpansionReport:
    """Taylor coefficients of the fixed-frequency C6 integrand.

    Coefficients of the monomials chi1*chi2, chi1*chi, chi2*chi, chi^2
    and chi1*chi2*chi, in J m^6 per unit of the integrand measure, plus
    the third-order coefficient divided by 2 hbar R1^3 R2^3 / (9 pi).
    """

    __slots__ = ("choice", "step", "coeff_chi1_chi2", "coeff_chi1_chi",
                 "coeff_chi2_chi", "coeff_chi_sq", "coeff_chi1_chi2_chi",
                 "third_order_ratio")

    def __init__(self, choice, step, coeff_chi1_chi2, coeff_chi1_chi,
                 coeff_chi2_chi, coeff_chi_sq, coeff_chi1_chi2_chi,
                 third_order_ratio):
        coefficients = (coeff_chi1_chi2, coeff_chi1_chi, coeff_chi2_chi,
                        coeff_chi_sq, coeff_chi1_chi2_chi, third_order_ratio)
        if not all(np.isfinite(c) for c in coefficients):
            raise ValueError("expansion produced non-finite coefficients")
        self.choice = choice
        self.step = step
        self.coeff_chi1_chi2 = coeff_chi1_chi2
        self.coeff_chi1_chi = coeff_chi1_chi
        self.coeff_chi2_chi = coeff_chi2_chi
        self.coeff_chi_sq = coeff_chi_sq
        self.coeff_chi1_chi2_chi = coeff_chi1_chi2_chi
        self.third_order_ratio = third_order_ratio

    def degree2_coefficients(self):
        return (self.coeff_chi1_chi2, self.coeff_chi1_chi,
                self.coeff_chi2_chi, self.coeff_chi_sq)


# signs of the analytic degree-2 coefficients, in the order
# (chi1*chi2, chi1*chi, chi2*chi, chi^2), in units of hbar R1^3 R2^3/(3 pi)
HAMAKER_COEFF_SIGNS = (-1.0, 1.0, 1.0, -1.0)


def _chi_integrand(chi1, chi2, chi, radius1, radius2, choice):
    # electric C6 integrand for constant, non-magnetic responses
    # 1 + chi1, 1 + chi2 in a constant medium 1 + chi; evaluating the
    # production value-kernel keeps the probe on the real code path
    eps = 1.0 + chi
    a1 = alpha_excess_values(1.0 + chi1, eps, radius1)
    a2 = alpha_excess_values(1.0 + chi2, eps, radius2)
    electric, _ = _c6_terms_from_values(a1, a2, 0.0, 0.0, eps, 1.0, choice)
    return electric


def _mixed2(f, i, j, h):
    # centred second mixed derivative d^2 f / dx_i dx_j at the origin
    def point(si, sj):
        x = [0.0, 0.0, 0.0]
        x[i] = si * h
        x[j] = sj * h
        return f(*x)
    return (point(1, 1) - point(1, -1) - point(-1, 1) + point(-1, -1)) / (4.0 * h * h)


def _pure2(f, i, h):
    x_plus = [0.0, 0.0, 0.0]
    x_minus = [0.0, 0.0, 0.0]
    x_plus[i] = h
    x_minus[i] = -h
    return (f(*x_plus) - 2.0 * f(0.0, 0.0, 0.0) + f(*x_minus)) / (h * h)


def _mixed3(f, h):
    total = 0.0
    for s1 in (1.0, -1.0):
        for s2 in (1.0, -1.0):
            for s3 in (1.0, -1.0):
                total += s1 * s2 * s3 * f(s1 * h, s2 * h, s3 * h)
    return total / (8.0 * h ** 3)


def _richardson2(stencil, h):
    # one extrapolation level for an O(h^2) stencil
    return (4.0 * stencil(h / 2.0) - stencil(h)) / 3.0


def expand_c6_integrand(radius1, radius2, choice, step=1e-3):
    """Finite-difference susceptibility expansion of the C6 integrand.

    Evaluates the fixed-frequency integrand as a pure function of
    (chi1, chi2, chi) for constant non-magnetic responses and extracts
    the five monomial coefficients on centred stencils with one level of
    Richardson extrapolation.  Exposes the three-particle discriminator:
    the chi1*chi2*chi coefficient equals 2 hbar R1^3 R2^3 / (9 pi) for
    the Abraham choice and 5/2 times that for the Maxwell choice.
    """
    if not 0.0 < step <= 1e-2:
        raise ValueError("step must lie in (0, 1e-2]")
    f = lambda c1, c2, c: _chi_integrand(c1, c2, c, radius1, radius2, choice)

    coeff_12 = _richardson2(lambda h: _mixed2(f, 0, 1, h), step)
    coeff_1m = _richardson2(lambda h: _mixed2(f, 0, 2, h), step)
    coeff_2m = _richardson2(lambda h: _mixed2(f, 1, 2, h), step)
    coeff_mm = _richardson2(lambda h: _pure2(f, 2, h), step) / 2.0
    coeff_123 = _richardson2(lambda h: _mixed3(f, h), step)

    three_particle_unit = 2.0 * HBAR * radius1 ** 3 * radius2 ** 3 / (9.0 * np.pi)
    return ExpansionReport(choice, step, coeff_12, coeff_1m, coeff_2m,
                           coeff_mm, coeff_123,
                           coeff_123 / three_particle_unit)


class ConsistencyReport:
    """Microscopic-consistency verdict for one stress choice."""

    __slots__ = ("choice", "expansion", "hamaker_match", "degree2_max_rel_error",
                 "third_order_ratio", "three_particle_match")

    def __init__(self, choice, expansion, hamaker_match, degree2_max_rel_error,
                 third_order_ratio, three_particle_match):
        self.choice = choice
        self.expansion = expansion
        self.hamaker_match = hamaker_match
        self.degree2_max_rel_error = degree2_max_rel_error
        self.third_order_ratio = third_order_ratio
        self.three_particle_match = three_particle_match


def verify_consistency(choice, step=1e-3, radius1=1e-9, radius2=1e-9,
                       degree2_rtol=1e-8, ratio_tol=1e-6):
    """Check the macroscopic integrand against the microscopic expansion.

    The degree-2 coefficients must match the pairwise-summation values
    (-, +, +, -) * hbar R1^3 R2^3 / (3 pi) for either stress choice; the
    chi1*chi2*chi coefficient matches the triplet term only for the
    Abraham choice, the Maxwell choice overshoots it by 5/2.
    """
    expansion = expand_c6_integrand(radius1, radius2, choice, step)
    unit = HBAR * radius1 ** 3 * radius2 ** 3 / (3.0 * np.pi)
    targets = [sign * unit for sign in HAMAKER_COEFF_SIGNS]
    errors = [abs(found - want) / abs(want)
              for found, want in zip(expansion.degree2_coefficients(), targets)]
    worst = max(errors)
    ratio = expansion.third_order_ratio
    return ConsistencyReport(
        choice=choice,
        expansion=expansion,
        hamaker_match=worst <= degree2_rtol,
        degree2_max_rel_error=worst,
        third_order_ratio=ratio,
        three_particle_match=abs(ratio - 1.0) <= ratio_tol,
    )
