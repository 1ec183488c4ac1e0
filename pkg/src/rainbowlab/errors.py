"""Exception types shared across the package."""


class RainbowLabError(Exception):
    """Base class for all package errors."""


class DomainError(RainbowLabError, ValueError):
    """An argument lies outside the operation's domain."""


class StructuralError(RainbowLabError, ValueError):
    """A value is malformed (wrong length, wrong shape)."""


class BudgetError(RainbowLabError, RuntimeError):
    """A request exceeds a hard resource cap."""
