class HallforgeError(Exception):
    pass


class BoundExceeded(HallforgeError, ValueError):
    """An enumeration would exceed a configured size bound."""


class InvalidArgument(HallforgeError, ValueError):
    pass


class InterpolationError(HallforgeError, ArithmeticError):
    """Samples are inconsistent with an integer polynomial of the requested degree."""


class ConsistencyError(HallforgeError, AssertionError):
    """Two independent computations of the same quantity disagree."""
