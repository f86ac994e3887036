"""Exception types shared across the library."""


class FatPointsError(Exception):
    """Base class for all library errors."""


class TooManyPoints(FatPointsError):
    """A system carries more base points than the operation supports."""


class NotStandardForm(FatPointsError):
    """Operation requires a system in standard form."""


class HypothesisViolated(FatPointsError):
    """Input does not satisfy the stated hypothesis of the formula."""


class PreconditionFailed(FatPointsError):
    """A documented precondition of the operation does not hold."""


class IndeterminatePoint(FatPointsError):
    """Point lies in the indeterminacy locus of the cubic involution."""


class BadIndex(FatPointsError):
    """Point index outside the admissible range."""


class SizeLimitExceeded(FatPointsError):
    """Interpolation matrix larger than the configured limit."""


class DegenerateSample(FatPointsError):
    """Random point sampling kept producing degenerate configurations."""
