"""Exception hierarchy shared by every skeinlab module."""

from __future__ import annotations


class SkeinlabError(Exception):
    """Base class for all errors raised by skeinlab."""


# notation
class NotationError(SkeinlabError, ValueError):
    """A diagram string could not be turned into a valid Diagram."""


class MalformedToken(NotationError):
    pass


class ArcCountError(NotationError):
    pass


class OrientationError(NotationError):
    pass


class GeneratorOutOfRange(NotationError):
    pass


# diagram
class IndexOutOfRange(SkeinlabError, IndexError):
    pass


# polyring
class VariableMismatch(SkeinlabError, ValueError):
    pass


class NotDivisible(SkeinlabError, ArithmeticError):
    pass


class ZeroPolynomial(SkeinlabError, ValueError):
    pass


class NotLaurent(SkeinlabError, ArithmeticError):
    pass


# engines
class DiagramTooLarge(SkeinlabError):
    pass


# determination
class SizeMismatch(SkeinlabError, ValueError):
    pass


class NotAKnot(SkeinlabError, ValueError):
    pass


# harness
class ParseError(SkeinlabError):
    """A census entry failed to parse; ``index`` is its position in the table."""

    def __init__(self, index: int, name: str, cause: Exception):
        super().__init__(f"entry {index} ({name!r}): {cause}")
        self.index = index
        self.name = name
        self.cause = cause
