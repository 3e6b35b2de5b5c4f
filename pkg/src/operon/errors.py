"""Shared error type for file and expression parsing."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed textual input; carries the 1-based source line when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")
