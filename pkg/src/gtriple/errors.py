"""Exception hierarchy shared by every module."""

from __future__ import annotations


class GTripleError(ValueError):
    """Base class for all errors raised by this package."""


class IndexOutOfRange(GTripleError):
    pass


class SelfLoop(GTripleError):
    pass


class DuplicateEdge(GTripleError):
    pass


class GTripleSyntaxError(GTripleError):
    """Malformed ``.gtriple`` text; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotAPermutation(GTripleError):
    pass


class TooLarge(GTripleError):
    """An exact exponential-time routine was called beyond its size guard."""


class CliqueSearchTooLarge(TooLarge):
    pass


class ExhaustiveTooLarge(TooLarge):
    pass


class YellowForbidden(GTripleError):
    """A placement ``x -> y`` was requested although ``(x, y)`` is yellow."""


class YellowNotAllowed(GTripleError):
    """A pair-only predicate was given a triple with yellow edges."""


class BadParam(GTripleError):
    pass


class ConfigError(GTripleError):
    pass
