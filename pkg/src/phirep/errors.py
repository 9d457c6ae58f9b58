"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class PhiRepError(Exception):
    """Base class for all package errors."""


class ParseError(PhiRepError, ValueError):
    def __init__(self, message: str, position: int | None = None) -> None:
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class AdjacentOnes(ParseError):
    """A digit string contains the forbidden factor ``11``."""


class NegativeInput(PhiRepError, ValueError):
    pass


class IterationGuardExceeded(PhiRepError, RuntimeError):
    pass


class NegativeIndex(PhiRepError, ValueError):
    pass


class OutOfDomain(PhiRepError, ValueError):
    pass


class RegexSyntaxError(ParseError):
    pass


class ArityMismatch(PhiRepError, ValueError):
    pass


class AlphabetMismatch(PhiRepError, ValueError):
    pass


class BadTrack(PhiRepError, ValueError):
    pass


class UnknownBuiltin(PhiRepError, LookupError):
    pass


class InconsistentConjecture(PhiRepError):
    def __init__(self, message: str, witness: str) -> None:
        super().__init__(f"{message}: {witness!r}")
        self.witness = witness
