"""Permittivity and permeability models on the imaginary frequency axis.

Every response function here is evaluated at purely imaginary frequencies
i*xi with xi >= 0 (rad/s), where causal response functions are real,
greater or equal one and non-increasing.  Real-frequency optics is out of
scope; no model in this module accepts a real frequency argument.
"""

import numpy as np
from scipy.interpolate import PchipInterpolator

from .constants import EPS0

__all__ = [
    "Oscillator",
    "ResponseFunction",
    "ConstantResponse",
    "OscillatorResponse",
    "TabulatedResponse",
    "LorentzPolarisability",
    "MolecularSpecies",
    "eval_response",
    "susceptibility",
    "clausius_mossotti_dilute",
    "validate_decay",
    "scale_susceptibility",
]

# susceptibility must have dropped by this factor at the probe frequency
# before a response function is admitted to full-axis quadrature
DECAY_FACTOR = 1e-3


def _check_xi(xi):
    xi = np.asarray(xi, dtype=float)
    if np.any(xi < 0.0):
        raise ValueError("imaginary frequency xi must be >= 0")
    return xi


class Oscillator:
    """Single Drude-Lorentz resonance, evaluated on the imaginary axis.

    Contributes wp^2 / (w0^2 + gamma*xi + xi^2) to the susceptibility,
    which is positive and non-increasing in xi.

    Parameters
    ----------
    plasma_strength : float
        Plasma frequency wp >= 0 (rad/s).
    resonance : float
        Resonance frequency w0 > 0 (rad/s).
    damping : float
        Damping rate gamma >= 0 (rad/s).
    """

    __slots__ = ("plasma_strength", "resonance", "damping")

    def __init__(self, plasma_strength, resonance, damping=0.0):
        if not plasma_strength >= 0.0:
            raise ValueError("plasma_strength must be >= 0")
        if not resonance > 0.0:
            raise ValueError("resonance must be > 0")
        if not damping >= 0.0:
            raise ValueError("damping must be >= 0")
        self.plasma_strength = float(plasma_strength)
        self.resonance = float(resonance)
        self.damping = float(damping)

    def contribution(self, xi):
        wp, w0, g = self.plasma_strength, self.resonance, self.damping
        return wp * wp / (w0 * w0 + g * xi + xi * xi)

    def __repr__(self):
        return (f"Oscillator(plasma_strength={self.plasma_strength:g}, "
                f"resonance={self.resonance:g}, damping={self.damping:g})")

    def __eq__(self, other):
        if not isinstance(other, Oscillator):
            return NotImplemented
        return (self.plasma_strength, self.resonance, self.damping) == \
               (other.plasma_strength, other.resonance, other.damping)


class ResponseFunction:
    """Scalar relative permittivity or permeability on the imaginary axis.

    Subclasses implement ``__call__(xi)`` for scalar or array ``xi`` and
    guarantee a real value >= 1, non-increasing in xi.
    """

    def __call__(self, xi):
        raise NotImplementedError

    def susceptibility(self, xi):
        return self(xi) - 1.0


class ConstantResponse(ResponseFunction):
    """Frequency-independent response value c >= 1.

    A constant other than 1 does not decay and is therefore rejected by
    the full-axis quadrature gate; it remains useful for integrand-level
    and fixed-frequency analyses.
    """

    __slots__ = ("value",)

    def __init__(self, value):
        if not value >= 1.0:
            raise ValueError("constant response value must be >= 1")
        self.value = float(value)

    def __call__(self, xi):
        xi = _check_xi(xi)
        return np.broadcast_to(self.value, xi.shape).copy() if xi.ndim else self.value

    def __repr__(self):
        return f"ConstantResponse({self.value:g})"


class OscillatorResponse(ResponseFunction):
    """Drude-Lorentz sum: 1 + sum_k wp_k^2 / (w0_k^2 + gamma_k*xi + xi^2)."""

    __slots__ = ("oscillators",)

    def __init__(self, oscillators):
        if isinstance(oscillators, Oscillator):
            oscillators = (oscillators,)
        self.oscillators = tuple(oscillators)
        for osc in self.oscillators:
            if not isinstance(osc, Oscillator):
                raise TypeError("oscillators must be Oscillator instances")

    def __call__(self, xi):
        xi = _check_xi(xi)
        out = np.ones_like(xi) if xi.ndim else 1.0
        for osc in self.oscillators:
            out = out + osc.contribution(xi)
        return out

    def __repr__(self):
        return f"OscillatorResponse({list(self.oscillators)!r})"


class TabulatedResponse(ResponseFunction):
    """Response sampled on the imaginary axis, interpolated in log xi.

    Uses a monotone piecewise-cubic (PCHIP) interpolant, which cannot
    overshoot, so the >= 1 and non-increasing invariants of the samples
    carry over to the interpolated values.  Below the first sample the
    value is held at the first sample.  Beyond the last sample the value
    is clamped to 1 (``extrapolation="clamp"``, the default) or a range
    error is raised (``extrapolation="raise"``).

    Parameters
    ----------
    xi_samples : array_like
        Strictly increasing sample frequencies, all > 0 (rad/s).
    values : array_like
        Response values, non-increasing and >= 1.
    extrapolation : {"clamp", "raise"}
    """

    __slots__ = ("xi_samples", "values", "extrapolation", "_interp")

    def __init__(self, xi_samples, values, extrapolation="clamp"):
        xi_samples = np.asarray(xi_samples, dtype=float)
        values = np.asarray(values, dtype=float)
        if xi_samples.ndim != 1 or xi_samples.shape != values.shape:
            raise ValueError("xi_samples and values must be 1-d arrays of equal length")
        if len(xi_samples) < 2:
            raise ValueError("need at least two samples")
        if np.any(xi_samples <= 0.0):
            raise ValueError("sample frequencies must be > 0")
        if np.any(np.diff(xi_samples) <= 0.0):
            raise ValueError("sample frequencies must be strictly increasing")
        if np.any(values < 1.0):
            raise ValueError("sampled response values must be >= 1")
        if np.any(np.diff(values) > 0.0):
            raise ValueError("sampled response values must be non-increasing")
        if extrapolation not in ("clamp", "raise"):
            raise ValueError("extrapolation must be 'clamp' or 'raise'")
        self.xi_samples = xi_samples
        self.values = values
        self.extrapolation = extrapolation
        self._interp = PchipInterpolator(np.log(xi_samples), values, extrapolate=False)

    def __call__(self, xi):
        xi = _check_xi(xi)
        scalar = xi.ndim == 0
        xi = np.atleast_1d(xi)
        above = xi > self.xi_samples[-1]
        if self.extrapolation == "raise" and np.any(above):
            raise ValueError("frequency beyond last sample and no extrapolation rule")
        below = xi < self.xi_samples[0]
        inside = ~(above | below)
        out = np.empty_like(xi)
        out[below] = self.values[0]
        out[above] = 1.0
        out[inside] = self._interp(np.log(xi[inside]))
        return float(out[0]) if scalar else out


class LorentzPolarisability:
    """Molecular polarisability alpha(i xi) = alpha0 * w0^2 / (w0^2 + xi^2).

    Single-resonance shape with static value alpha0 >= 0 (C m^2/V) and
    resonance w0 > 0 (rad/s); positive and non-increasing on the axis.
    """

    __slots__ = ("static", "resonance")

    def __init__(self, static, resonance):
        if not static >= 0.0:
            raise ValueError("static polarisability must be >= 0")
        if not resonance > 0.0:
            raise ValueError("resonance must be > 0")
        self.static = float(static)
        self.resonance = float(resonance)

    def __call__(self, xi):
        xi = _check_xi(xi)
        w0sq = self.resonance * self.resonance
        return self.static * w0sq / (w0sq + xi * xi)

    def __repr__(self):
        return f"LorentzPolarisability(static={self.static:g}, resonance={self.resonance:g})"


class MolecularSpecies:
    """Dilute molecular species: number density plus polarisability.

    Parameters
    ----------
    number_density : float
        eta >= 0 (1/m^3).
    polarisability : callable
        xi -> alpha(i xi) in C m^2/V, vectorized over xi.
    """

    __slots__ = ("number_density", "polarisability")

    def __init__(self, number_density, polarisability):
        if not number_density >= 0.0:
            raise ValueError("number density must be >= 0")
        self.number_density = float(number_density)
        self.polarisability = polarisability


def eval_response(response, xi):
    """Evaluate a response function at imaginary frequency i*xi."""
    return response(xi)


def susceptibility(response, xi):
    """Susceptibility chi(i xi) = response(i xi) - 1, always >= 0."""
    return response(xi) - 1.0


def clausius_mossotti_dilute(species, xi):
    """Dilute-limit susceptibility chi = eta * alpha(i xi) / eps0."""
    return species.number_density * species.polarisability(xi) / EPS0


def validate_decay(response, xi_max):
    """True when the susceptibility has decayed enough for full-axis quadrature.

    Passes when chi(xi_max) < 1e-3 * chi(0), or when chi(0) = 0.  Used as
    a gate in front of every integral over the whole imaginary axis.
    """
    if not xi_max > 0.0:
        raise ValueError("xi_max must be > 0")
    chi0 = susceptibility(response, 0.0)
    if chi0 == 0.0:
        return True
    return susceptibility(response, xi_max) < DECAY_FACTOR * chi0


def scale_susceptibility(response, factor):
    """Response with susceptibility scaled by a factor >= 0.

    Returns a new response of the same kind with chi(xi) -> factor*chi(xi);
    for an oscillator model this scales every plasma strength by
    sqrt(factor).  Used for medium-density sweeps.
    """
    if not factor >= 0.0:
        raise ValueError("scale factor must be >= 0")
    if isinstance(response, ConstantResponse):
        return ConstantResponse(1.0 + factor * (response.value - 1.0))
    if isinstance(response, OscillatorResponse):
        root = factor ** 0.5
        return OscillatorResponse([
            Oscillator(root * o.plasma_strength, o.resonance, o.damping)
            for o in response.oscillators
        ])
    if isinstance(response, TabulatedResponse):
        return TabulatedResponse(
            response.xi_samples,
            1.0 + factor * (response.values - 1.0),
            extrapolation=response.extrapolation,
        )
    raise TypeError(f"cannot scale susceptibility of {type(response).__name__}")
