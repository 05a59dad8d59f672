"""Exception types shared across the package."""


class CscflagError(Exception):
    """Base class for all package errors."""


class InvalidLieType(CscflagError):
    """Lie type string or rank constraint violated."""


class DimensionMismatch(CscflagError):
    """Vector length incompatible with the ambient root system."""


class IndexOutOfRange(CscflagError):
    """Simple-root index outside 1..rank."""


class ZeroWeight(CscflagError):
    """The zero weight does not define a line bundle."""


class NonPositiveClass(CscflagError):
    """Kahler class coefficients must all be positive."""


class NotSemiNegative(CscflagError):
    """Momentum construction requires a semi-negative bundle weight."""


class InternalInconsistency(CscflagError):
    """Certified root count contradicts what the theory guarantees."""


class WrongCase(CscflagError):
    """Asymptotic datum requested for the wrong curvature sign."""


class GridOutOfInterval(CscflagError):
    """Sample point outside the interior of the momentum interval."""


class StepTooLarge(CscflagError):
    """Local error estimate of the numeric integrator exceeds its bound."""


class InvalidRange(CscflagError):
    """Search range for the smooth-completion constant must be positive."""


class SchemaError(CscflagError):
    """Job configuration does not match the expected schema."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")
