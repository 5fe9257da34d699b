"""
Words over Artin generators
Letters are signed generator names; words are immutable letter sequences
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple, Union

from .coxeter_graph import LabeledGraph
from .errors import ArtinValidationError, UnknownGenerator


class Letter(NamedTuple):
    generator: str
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)


class Side(Enum):
    """Which end of an alternating product is pinned"""
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class Word:
    """Finite sequence of letters; the empty word is the identity"""
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        for letter in self.letters:
            if letter.sign not in (1, -1):
                raise ArtinValidationError(f"letter exponent must be +1 or -1, got {letter.sign}")

    @classmethod
    def identity(cls) -> "Word":
        return cls(())

    @classmethod
    def generator(cls, name: str, power: int = 1) -> "Word":
        """name^power expanded into |power| letters"""
        sign = 1 if power >= 0 else -1
        return cls(tuple(Letter(name, sign) for _ in range(abs(power))))

    @classmethod
    def of(cls, *terms: Union[str, Tuple[str, int]]) -> "Word":
        """Word.of('a', ('b', -1), ('a', 2)) is a b^-1 a a"""
        letters: List[Letter] = []
        for term in terms:
            name, power = (term, 1) if isinstance(term, str) else term
            letters.extend(cls.generator(name, power).letters)
        return cls(tuple(letters))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, exponent: int) -> "Word":
        base = self if exponent >= 0 else self.inverse()
        return Word(base.letters * abs(exponent))

    def inverse(self) -> "Word":
        return Word(tuple(letter.inverse() for letter in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def generators(self) -> FrozenSet[str]:
        return frozenset(letter.generator for letter in self.letters)

    def exponent_sum(self, name: str) -> int:
        return sum(letter.sign for letter in self.letters if letter.generator == name)

    def restrict(self, names: Iterable[str]) -> "Word":
        """Delete every letter whose generator is not in names"""
        keep = set(names)
        return Word(tuple(letter for letter in self.letters if letter.generator in keep))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        terms = []
        for (name, sign), run in itertools.groupby(self.letters):
            power = sign * len(list(run))
            terms.append(name if power == 1 else f"{name}^{power}")
        return " ".join(terms)


WordLike = Union[Word, str]


def _as_word(item: WordLike) -> Word:
    return Word.generator(item) if isinstance(item, str) else item


def reduce_free(w: Word) -> Word:
    """Cancel adjacent x x^-1 pairs until none remain"""
    stack: List[Letter] = []
    for letter in w.letters:
        if stack and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack))


def alternating(x: WordLike, y: WordLike, count: int, side: Side = Side.LEFT) -> Word:
    """x y x ... (LEFT) or ... y x y (RIGHT) with count factors"""
    if count < 0:
        raise ArtinValidationError(f"alternating product needs count >= 0, got {count}")
    first, second = _as_word(x), _as_word(y)
    if side is Side.RIGHT and count % 2 == 1:
        first, second = second, first
    letters: List[Letter] = []
    for i in range(count):
        letters.extend((first if i % 2 == 0 else second).letters)
    return Word(tuple(letters))


@dataclass(frozen=True, eq=False)
class GeneratorMap:
    """Map sending each vertex to a vertex of the target or to the identity (None)"""
    graph: LabeledGraph
    target: FrozenSet[str]
    images: Mapping[str, Optional[str]]

    def __post_init__(self):
        if set(self.images) != set(self.graph.vertices):
            missing = sorted(set(self.graph.vertices) - set(self.images))
            raise ArtinValidationError(f"generator map is not total: missing {missing}")
        for vertex, image in self.images.items():
            if vertex in self.target and image != vertex:
                raise ArtinValidationError(f"target generator '{vertex}' must be fixed")
            if image is not None and image not in self.target:
                raise ArtinValidationError(f"image '{image}' of '{vertex}' lies outside the target")

    def image(self, vertex: str) -> Optional[str]:
        if vertex not in self.images:
            raise UnknownGenerator(vertex)
        return self.images[vertex]

    def image_of_set(self, subset: Iterable[str]) -> FrozenSet[str]:
        """Images of a vertex subset with identities dropped"""
        return frozenset(img for img in (self.image(v) for v in subset) if img is not None)

    def as_dict(self) -> Dict[str, Optional[str]]:
        return {v: self.images[v] for v in self.graph.vertices}


def apply_map(m: GeneratorMap, w: Word) -> Word:
    """Letterwise image, identities dropped, signs kept, freely reduced"""
    letters = []
    for letter in w.letters:
        image = m.image(letter.generator)
        if image is not None:
            letters.append(Letter(image, letter.sign))
    return reduce_free(Word(tuple(letters)))


def check_letters(w: Word, allowed: Iterable[str]) -> None:
    names = set(allowed)
    for letter in w.letters:
        if letter.generator not in names:
            raise UnknownGenerator(letter.generator)
