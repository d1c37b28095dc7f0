"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class ConvergenceError(RuntimeError):
    """A numerical routine failed to reach the requested tolerance.

    Carries the best estimate obtained so far in ``estimate`` so callers
    can inspect or report it.
    """

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate
