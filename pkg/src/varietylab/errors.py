"""Exception hierarchy shared by every module."""

from __future__ import annotations


class VarietyLabError(Exception):
    """Base class for all library errors."""


class ParseError(VarietyLabError, ValueError):
    """Malformed regex, identity or file content.

    ``position`` is the 0-based offset into the input where parsing failed.
    """

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class AlphabetError(VarietyLabError, ValueError):
    """Symbol outside an alphabet, or mismatched alphabets in a binary operation."""


class SizeCapExceeded(VarietyLabError):
    """A construction would exceed its configured size cap."""


class InvalidStructure(VarietyLabError, ValueError):
    """A table, order or action violates its algebraic laws.

    ``witness`` holds the offending elements when one is known.
    """

    def __init__(self, message: str, witness: tuple | None = None):
        self.witness = witness
        if witness is not None:
            message = f"{message}; witness {witness}"
        super().__init__(message)


class InternalInconsistency(VarietyLabError, AssertionError):
    """Two deciders that must agree returned different answers."""
