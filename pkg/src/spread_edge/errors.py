"""Exception hierarchy shared across the package."""


class SpreadEdgeError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SpreadEdgeError, ValueError):
    """An input violates a documented precondition."""


class OutOfModelError(DomainError):
    """A projected spread falls outside the modeled +/-39 range."""


class DataFormatError(SpreadEdgeError):
    """A CSV or JSON payload does not match the expected schema."""
