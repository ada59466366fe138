class DegtreeError(Exception):
    """Base class for all errors raised by degtree."""


class InvalidInputError(DegtreeError, ValueError):
    pass


class DegenerateAngleError(InvalidInputError):
    """An angle was requested with a zero-length arm."""


class ResourceLimitError(DegtreeError):
    """The request exceeds a documented enumeration cap."""


class InfeasibleError(DegtreeError):
    """No spanning tree satisfies the requested degree bound."""
