"""Exception types shared across the package."""


class ParseError(ValueError):
    """Raised when a text form (vector, word, T-params, census file) is malformed."""


class UnsupportedInput(ValueError):
    """Raised when an input is valid but outside an operation's supported range."""
