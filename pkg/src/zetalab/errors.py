"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class BoundaryError(DomainError):
    """A point touches the boundary of the open unit hypercube."""


class UnsupportedDimensionError(DomainError):
    """The requested dimension exceeds what the evaluation scheme supports."""


class IntegrityError(RuntimeError):
    """An exact-arithmetic consistency condition failed (would falsify a claim)."""


class QuadratureConvergenceError(RuntimeError):
    """Level doubling stopped before two successive estimates agreed.

    Carries the last two estimates so callers can inspect how far apart
    they remained.
    """

    def __init__(self, message, estimates):
        super().__init__(message)
        self.estimates = tuple(estimates)
