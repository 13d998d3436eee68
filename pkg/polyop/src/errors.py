"""Errors raised by the engine.

Each class corresponds to one exit status of the command line.
"""


class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


class PreconditionError(DomainError):
    """A documented precondition of an operation does not hold."""


class UnsupportedDimensionError(DomainError):
    """A complex is too large in dimension for exact recognition."""


class ResourceBoundError(ValueError):
    """A computation would exceed a configured size bound."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed, which points at a bug."""
