"""Exception types shared across oedkit modules."""


class OedkitError(Exception):
    """Base class for all oedkit errors."""


class ValidationError(OedkitError):
    """Invalid input: bad dimensions, out-of-bounds designs, malformed config."""


class NonFinite(OedkitError):
    """A matrix entry or model output is NaN or infinite."""


class IndexOutOfRange(OedkitError):
    """Triangular index outside [0, p(p+1)/2) or pair outside 0 <= i <= j < p."""


class SingularFIM(OedkitError):
    """Information matrix is rank deficient (smallest eigenvalue at or below
    the rank tolerance) where a criterion requires full rank."""


class NonPositiveDeterminant(OedkitError):
    """log-determinant requested for a matrix whose determinant sign is <= 0."""


class RepeatedExtremeEigenvalue(OedkitError):
    """Extreme eigenvalue is not simple; eigenvalue/eigenvector derivatives
    are undefined. Surfaced to the caller instead of silently perturbing."""


class DimensionMismatch(ValidationError):
    """Operands have inconsistent shapes."""


class SimulationFailure(OedkitError):
    """The wrapped simulation model raised an exception."""


class RecycleNotConverged(OedkitError):
    """Flowsheet tear-stream iteration failed to reach the residual tolerance,
    or the converged operating point is degenerate (a product stream vanished)."""


class NegativeState(OedkitError):
    """A converged flowsheet contains a negative internal flow or concentration."""


class NotConverged(OedkitError):
    """An iterative solver hit its iteration limit. Estimation returns the best
    iterate with converged=False instead of raising; this type is used by
    callers that want a hard failure."""


class AllStartsFailed(OedkitError):
    """Every multistart attempt of the design optimizer raised an error."""


class NonPositiveSubmatrix(OedkitError):
    """2x2 covariance submatrix for a confidence ellipse is not positive definite."""
