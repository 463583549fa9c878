"""Exception types shared across the package."""


class CausekitError(Exception):
    """Base class for every domain-level failure raised by this package."""


class ParseError(CausekitError):
    """Malformed instance or rule text."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class ResourceLimitError(CausekitError):
    """A declared enumeration budget was exceeded; results are never truncated silently."""
