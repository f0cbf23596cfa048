"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid instance data, a malformed argument, or a violated precondition."""


class ParseError(InputError):
    """Malformed instance or solution text. Carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LimitError(RuntimeError):
    """A resource guard tripped before the computation could finish."""
