"""Exception types shared across the package."""


class ConfigError(Exception):
    """A run configuration cannot be parsed or does not resolve."""


class DivergentIntegralError(Exception):
    """An integrand does not decay on the imaginary frequency axis."""


class ConvergenceError(Exception):
    """Quadrature did not reach the requested tolerance within the node budget.

    Attributes
    ----------
    best_estimate : float
        Integral estimate from the finest rule tried.
    error_estimate : float
        Last successive difference between estimates.
    """

    def __init__(self, message, best_estimate, error_estimate):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate
