"""Shared exception types."""


class ParseError(ValueError):
    """Raised when a textual input does not match a grammar.

    Carries a human-readable message that includes the offending position
    whenever the tokenizer can tell.
    """

    def __init__(self, message: str, text: str | None = None, pos: int | None = None):
        if text is not None and pos is not None:
            message = f"{message} (at offset {pos} in {text!r})"
        super().__init__(message)
        self.pos = pos


class DimensionMismatch(ValueError):
    """Two values built over different ambient dimensions were combined."""


class TruncationRefused(ValueError):
    """A requested truncation is below the sound default and was rejected."""
