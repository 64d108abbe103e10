"""Exception types shared across the package."""


class SignedCSFError(Exception):
    """Base class for all package errors."""


class GraphFormatError(SignedCSFError, ValueError):
    """Malformed graph file or a graph invariant violation."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapExceeded(SignedCSFError):
    """A configured size cap would be exceeded by the requested computation."""


class VerificationError(SignedCSFError):
    """An internal consistency check failed (indicates an upstream bug)."""
