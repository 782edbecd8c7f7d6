"""Semi-infinite quadrature over the imaginary frequency axis.

All dispersion coefficients are integrals of smooth, decaying integrands
over xi in [0, inf).  The substitution xi = scale * u / (1 - u) maps the
axis onto the unit interval; a Gauss-Legendre rule is then applied with
node doubling until two successive estimates agree.  Everything is
deterministic: fixed nodes, fixed summation order.
"""

from functools import lru_cache

import numpy as np
from scipy.special import roots_legendre

from .errors import ConvergenceError, DivergentIntegralError
from .materials import validate_decay

__all__ = ["QuadratureSpec", "integrate_semiinfinite", "suggest_scale"]

DEFAULT_SCALE = 1e16    # rad/s, typical electronic resonance
BASE_NODES = 16

# probe frequency for decay gates, in units of the quadrature scale
DECAY_PROBE_FACTOR = 1e3


class QuadratureSpec:
    """Parameters of the semi-infinite integration.

    Parameters
    ----------
    scale : float
        Mapping scale xi_c > 0 (rad/s); nodes cluster around it, so it
        should sit near the dominant resonance of the integrand.
    rtol : float
        Relative tolerance in (0, 1) on successive estimates.
    max_doublings : int
        Node-doubling budget (>= 1) before giving up.
    """

    __slots__ = ("scale", "rtol", "max_doublings")

    def __init__(self, scale=DEFAULT_SCALE, rtol=1e-9, max_doublings=10):
        if not scale > 0.0:
            raise ValueError("quadrature scale must be > 0")
        if not 0.0 < rtol < 1.0:
            raise ValueError("rtol must lie in (0, 1)")
        if max_doublings < 1:
            raise ValueError("max_doublings must be >= 1")
        self.scale = float(scale)
        self.rtol = float(rtol)
        self.max_doublings = int(max_doublings)

    @property
    def decay_probe(self):
        """Frequency at which decay gates test the integrand tail."""
        return DECAY_PROBE_FACTOR * self.scale

    def __repr__(self):
        return (f"QuadratureSpec(scale={self.scale:g}, rtol={self.rtol:g}, "
                f"max_doublings={self.max_doublings})")


@lru_cache(maxsize=None)
def _unit_rule(n):
    # Gauss-Legendre nodes and weights mapped from [-1, 1] to [0, 1]
    x, w = roots_legendre(n)
    return 0.5 * (x + 1.0), 0.5 * w


def integrate_semiinfinite(f, quad):
    """Integrate ``f`` over xi in [0, inf).

    Parameters
    ----------
    f : callable
        Integrand, vectorized over an array of xi values, finite on the
        axis.  The caller is responsible for decay (see validate_decay).
    quad : QuadratureSpec

    Returns
    -------
    (value, error_estimate) : (float, float)
        The error estimate is the last successive difference between
        doubled rules.

    Raises
    ------
    ConvergenceError
        Tolerance not reached within the doubling budget; carries the
        best estimate.
    DivergentIntegralError
        The integrand produced non-finite values.
    """
    previous = None
    estimate = np.nan
    diff = np.inf
    for level in range(quad.max_doublings + 1):
        u, w = _unit_rule(BASE_NODES * 2 ** level)
        xi = quad.scale * u / (1.0 - u)
        jacobian = quad.scale / (1.0 - u) ** 2
        values = np.asarray(f(xi), dtype=float) * jacobian
        if not np.all(np.isfinite(values)):
            raise DivergentIntegralError("integrand is not finite on the axis")
        estimate = float(np.dot(w, values))
        if previous is not None:
            diff = abs(estimate - previous)
            if diff <= quad.rtol * abs(estimate):
                return estimate, diff
        previous = estimate
    raise ConvergenceError(
        f"quadrature did not converge to rtol={quad.rtol:g} "
        f"within {quad.max_doublings} doublings",
        best_estimate=estimate, error_estimate=diff)


def suggest_scale(*responses, fallback=DEFAULT_SCALE):
    """Quadrature scale from the strongest oscillator among the responses.

    Returns the resonance frequency of the largest-plasma-strength
    oscillator found, or ``fallback`` when none of the responses carries
    oscillator data.
    """
    best = None
    for response in responses:
        for osc in getattr(response, "oscillators", ()):
            if osc.plasma_strength > 0.0 and (best is None or osc.plasma_strength > best[0]):
                best = (osc.plasma_strength, osc.resonance)
    return best[1] if best is not None else fallback


def require_response_decay(quad, *responses):
    """Gate full-axis quadrature on decaying response functions."""
    for response in responses:
        if not validate_decay(response, quad.decay_probe):
            raise DivergentIntegralError(
                f"{response!r} does not decay on the imaginary axis; "
                "the dispersion integral would diverge")


def require_product_decay(product, quad, what="polarisability product"):
    """Gate full-axis quadrature on a decaying integrand factor."""
    head = float(product(0.0))
    if head == 0.0:
        return
    tail = float(product(quad.decay_probe))
    if not abs(tail) < 1e-3 * abs(head):
        raise DivergentIntegralError(
            f"{what} does not decay on the imaginary axis")
