"""Exception types shared across the toolkit."""


class LingkitError(Exception):
    """Base class for all errors raised by lingkit."""


class ConlluParseError(LingkitError):
    """Malformed CoNLL-U input. Carries the 1-based line number when known."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class LexiconError(LingkitError):
    """Unusable lexicon file. Carries the 1-based line number when known."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class UnknownFeatureError(LingkitError):
    """A selection referenced a feature key, family, or branch that does not exist."""
