"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """A well-formed request outside an operation's domain (bad parameters,
    unsupported regime, invalid module, ...).  The CLI maps these to exit 1."""


class ParseError(DomainError):
    """Expression text violating the grammar.  Carries the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownLetterError(ParseError):
    """Identifier not declared in the active alphabet."""
