"""
Exception hierarchy for the Artin retraction toolkit
Every error raised by the library derives from ArtinError
"""

from typing import Iterable, Optional, Tuple


class ArtinError(Exception):
    """Base class for all library errors"""


class ArtinValidationError(ArtinError):
    """Malformed input: unknown names, bad labels, unparsable text"""


class PreconditionError(ArtinError):
    """Operation called outside its stated hypotheses"""


class InconsistentResult(ArtinError):
    """Two independent computations disagreed"""


class UnknownVertex(ArtinValidationError):
    def __init__(self, vertex: str):
        self.vertex = vertex
        super().__init__(f"unknown vertex '{vertex}'")


class UnknownGenerator(ArtinValidationError):
    def __init__(self, generator: str):
        self.generator = generator
        super().__init__(f"unknown generator '{generator}'")


class SelfPair(ArtinValidationError):
    def __init__(self, vertex: str):
        self.vertex = vertex
        super().__init__(f"pair ({vertex}, {vertex}) has no label")


class BadLabel(ArtinValidationError):
    def __init__(self, text: str):
        self.text = text
        super().__init__(f"bad label '{text}': expected an integer >= 2 or 'inf'")


class ParseError(ArtinValidationError):
    """Syntax error with a 1-based source position"""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class DuplicateEdge(ParseError):
    def __init__(self, u: str, v: str, line: int):
        super().__init__(f"duplicate edge {u} {v}", line, 1)
        self.pair = (u, v)


class NotIrreducible(PreconditionError):
    def __init__(self, components: Iterable[Iterable[str]]):
        self.components = [sorted(c) for c in components]
        super().__init__(f"graph has {len(self.components)} irreducible components")


class AmbiguousOddTarget(PreconditionError):
    def __init__(self, vertex: str, targets: Iterable[str]):
        self.vertex = vertex
        self.targets = tuple(sorted(targets))
        super().__init__(
            f"vertex '{vertex}' has odd edges to several target generators: {', '.join(self.targets)}"
        )


class NotFCType(PreconditionError):
    def __init__(self, clique: Optional[Iterable[str]] = None):
        self.clique = tuple(sorted(clique)) if clique is not None else None
        detail = f" (non-spherical clique {{{', '.join(self.clique)}}})" if self.clique else ""
        super().__init__(f"graph is not of FC type{detail}")


class TooLarge(PreconditionError):
    def __init__(self, size: int, cap: int, what: str = "input"):
        self.size = size
        self.cap = cap
        super().__init__(f"{what} of size {size} exceeds the cap {cap}")


class NotOddOddFree(PreconditionError):
    def __init__(self, vertex: str):
        self.vertex = vertex
        super().__init__(f"vertex '{vertex}' is incident to two odd-labelled edges")


class NotAdmissible(PreconditionError):
    def __init__(self, subset: Iterable[str], reason: str):
        self.subset = tuple(sorted(subset))
        self.reason = reason
        super().__init__(
            f"no ordinary retraction onto {{{', '.join(self.subset)}}}: {reason}"
        )


class LabelTooSmall(PreconditionError):
    def __init__(self, u: str, v: str):
        super().__init__(f"label of ({u}, {v}) is 2; elementary ribbons need a label > 2")


class InfiniteLabel(PreconditionError):
    def __init__(self, u: str, v: str):
        super().__init__(f"label of ({u}, {v}) is infinite")


class NotInScope(PreconditionError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class NotRAAG(PreconditionError):
    def __init__(self, pair: Tuple[str, str], label: str):
        self.pair = pair
        super().__init__(f"label {label} on ({pair[0]}, {pair[1]}) is neither 2 nor inf")


class InvalidArgument(PreconditionError):
    """Numeric argument outside its documented range"""
