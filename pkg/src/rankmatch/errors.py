from __future__ import annotations


class ParseError(ValueError):
    """Malformed space, matrix or graph text; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class HypothesisViolation(ValueError):
    """An input does not satisfy the structural hypothesis an operation relies on.

    ``member`` optionally holds the offending matrix, ``index`` the offending
    1-based basis position.
    """

    def __init__(self, message: str, member=None, index: int | None = None):
        self.member = member
        self.index = index
        super().__init__(message)


class SpaceTooLarge(ValueError):
    """Exhaustive enumeration of a space would exceed the configured cap."""
