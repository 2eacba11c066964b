"""Exception hierarchy shared by the construction and I/O modules."""


class SpannerError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(SpannerError, ValueError):
    """Malformed point set, graph or grid (non-finite, coincident, out of range)."""


class NotConvex(SpannerError):
    pass


class NotSeparated(SpannerError):
    pass


class GridTooSmall(SpannerError):
    pass


class NotPlane(SpannerError):
    pass


class RadiusCollision(SpannerError):
    pass


class DegreeBoundViolated(SpannerError):
    pass


class DomainError(SpannerError, ValueError):
    pass


class SpecError(SpannerError, ValueError):
    """Contradictory or incomplete instance specification."""
