"""Exception types shared across the package."""


class CdglError(Exception):
    """Base class for all package errors."""


class PresentationError(CdglError):
    """Malformed presentation (duplicate names, bad degrees, ...)."""


class DomainError(CdglError):
    """An element does not satisfy an operation's precondition."""


class ConstructionError(CdglError):
    """An internal consistency check failed while building a derived
    object; indicates a bug upstream, not bad user input."""


class PrecisionError(CdglError):
    """A truncated table or iteration was too short for the request."""


class ComposabilityError(CdglError):
    """Attempt to compose non-composable arrows."""


class NotLieElementError(CdglError):
    """A tensor polynomial is not in the image of the free Lie algebra."""
