"""Exception types shared across the package."""


class KinkspecError(Exception):
    """Base class for all package errors."""


class DomainError(KinkspecError, ValueError):
    """A parameter lies outside the range where an operation is defined."""


class NumericalError(KinkspecError, RuntimeError):
    """A numerical procedure failed to converge or lost its bracket."""


class InstabilityError(NumericalError):
    """Time stepping produced non-finite values."""

    def __init__(self, message, t=None):
        super().__init__(message if t is None else f"{message} (t={t:.6g})")
        self.t = t


class DiagnosticError(KinkspecError):
    """A diagnostic's precondition is not met by the supplied data."""
