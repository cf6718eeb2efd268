"""Exception types shared across the package."""


class FlagConnError(ValueError):
    """Base class for all errors raised by this package."""


class ConfigurationError(FlagConnError):
    """Invalid configuration: unknown family, bad rank, bad metric coefficients."""


class DimensionError(FlagConnError):
    """Operands with mismatched coordinate lengths."""


class DomainError(FlagConnError):
    """Argument outside the mathematical domain of the operation."""


class RepresentationError(FlagConnError):
    """Element violates a representation invariant (e.g. the reality condition)."""
