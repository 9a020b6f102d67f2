"""Exception types shared across the package."""


class BallMetricsError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(BallMetricsError):
    """Input outside the valid domain (point not in the open unit ball,
    radius out of range, malformed parameter)."""


class DegenerateError(BallMetricsError):
    """A geometric construction degenerated (zero-length direction vector)."""


class NotCollinearError(BallMetricsError):
    """Points required to be collinear with the origin are not."""


class ConvergenceError(BallMetricsError):
    """An iterative refinement did not reach its residual target.

    Carries the best value found so callers can still inspect it.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class EmptyTraceError(BallMetricsError):
    """A traced metric circle kept no vertices (tolerance too tight for
    the sample count)."""


class UnsupportedRegime(BallMetricsError):
    """A parameter combination outside the regime a statement covers."""


class NonpositiveArgError(BallMetricsError):
    """An inverse hyperbolic bound is undefined because its radicand is
    not positive."""
