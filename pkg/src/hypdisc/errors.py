"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates a mathematical precondition.

    Raised for points on or outside the unit circle, concentrations <= 1,
    CDF arguments outside [0, 1], malformed weights, and the like.
    """


class NumericError(RuntimeError):
    """A numerical routine failed to reach its accuracy target."""


class NonConvergenceError(RuntimeError):
    """An iterative solver exhausted its iteration budget.

    The best iterate seen so far is attached as ``best``.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class ObjectiveError(RuntimeError):
    """An objective function returned NaN. The offending point is attached."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point
