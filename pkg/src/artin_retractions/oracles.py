"""
Brute-force oracles

Bounded searches that certify the impossibility statements behind the
triangle classification, plus independent checkers used to validate the
dihedral normal forms and the chordality test
"""

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

import structlog

from .config import Config
from .coxeter_graph import LabeledGraph, odd_classes
from .errors import InvalidArgument, TooLarge
from .normal_forms import dihedral_nf
from .words import Letter, Side, Word, alternating, reduce_free

logger = structlog.get_logger("oracle")

LETTER_ORDER = (Letter("a", 1), Letter("a", -1), Letter("b", 1), Letter("b", -1))


@dataclass
class SearchOutcome:
    found: Optional[Word]
    searched_count: int
    bound: int


@dataclass
class Triangle234Outcome(SearchOutcome):
    candidates: int
    parity_obstruction_holds: bool


@dataclass(frozen=True)
class AbelianizationResult:
    rank: int
    class_of: Dict[str, int]


def reduced_words(max_len: int) -> Iterator[Word]:
    """Freely reduced words over a, b and their inverses, by length then letter order"""
    layer: List[Word] = [Word.identity()]
    yield layer[0]
    for _ in range(max_len):
        nxt = []
        for word in layer:
            for letter in LETTER_ORDER:
                if word.letters and word.letters[-1] == letter.inverse():
                    continue
                extended = Word(word.letters + (letter,))
                nxt.append(extended)
                yield extended
        layer = nxt


def _alternating_equation(generator: str, x: Word, count: int) -> bool:
    left = alternating(Word.generator(generator), x, count, Side.RIGHT)
    right = alternating(x, Word.generator(generator), count, Side.RIGHT)
    return reduce_free(left) == reduce_free(right)


def f2_system_search(r: int, s: int, max_len: int, single_equation: bool = False) -> SearchOutcome:
    """Look for x in F(a,b) with (a,x)_r = (x,a)_r and (b,x)_s = (x,b)_s"""
    if r < 1 or r % 2 == 0:
        raise InvalidArgument(f"r must be odd and >= 1, got {r}")
    if not single_equation and (s < 2 or s % 2 == 1):
        raise InvalidArgument(f"s must be even and >= 2, got {s}")
    searched = 0
    for x in reduced_words(max_len):
        searched += 1
        if not _alternating_equation("a", x, r):
            continue
        if single_equation or _alternating_equation("b", x, s):
            logger.info("free group solution found", r=r, s=s, x=str(x))
            return SearchOutcome(x, searched, max_len)
    logger.debug("free group search exhausted", r=r, s=s, max_len=max_len, searched=searched)
    return SearchOutcome(None, searched, max_len)


class CentralAmalgamForm:
    """
    Independent word problem solution for the Artin group of type I2(m)

    For m odd the group is <x, y | x^2 = y^m> through x = Delta, y = ab.
    For m even it is <a, y | a y^(m/2) = y^(m/2) a> through y = ab.
    In both cases a central element z (x^2, or y^(m/2)) is pulled to the front,
    and the remaining syllables form a reduced free-product word over fixed
    coset representatives. The pair (power of z, syllables) is a unique key.
    """

    def __init__(self, m: int):
        if m < 2:
            raise InvalidArgument(f"label must be >= 2, got {m}")
        self.m = m
        if m % 2 == 1:
            k = (m - 1) // 2
            self.moduli: Dict[str, Optional[int]] = {"x": 2, "y": m}
            images = {"a": [("y", -k), ("x", 1)], "b": [("x", -1), ("y", k + 1)]}
        else:
            self.moduli = {"a": None, "y": m // 2}
            images = {"a": [("a", 1)], "b": [("a", -1), ("y", 1)]}
        self.images: Dict[Letter, List[Tuple[str, int]]] = {}
        for name, syllables in images.items():
            self.images[Letter(name, 1)] = syllables
            self.images[Letter(name, -1)] = [(sym, -e) for sym, e in reversed(syllables)]

    def _times(self, key, symbol: str, exponent: int):
        power, syllables = key
        modulus = self.moduli[symbol]
        if modulus is not None:
            power += exponent // modulus
            exponent %= modulus
        if exponent == 0:
            return power, syllables
        if syllables and syllables[-1][0] == symbol:
            total = syllables[-1][1] + exponent
            if modulus is not None:
                power += total // modulus
                total %= modulus
            rest = syllables[:-1]
            return power, (rest if total == 0 else rest + ((symbol, total),))
        return power, syllables + ((symbol, exponent),)

    def multiply(self, key, letter: Letter):
        for symbol, exponent in self.images[letter]:
            key = self._times(key, symbol, exponent)
        return key

    def key(self, w: Word):
        current = (0, ())
        for letter in w.letters:
            current = self.multiply(current, letter)
        return current


def dihedral_ball(m: int, radius: int) -> List[List[Word]]:
    """Partition all words of length <= radius into equality classes of A(I2(m))"""
    if radius > Config.BALL_RADIUS_CAP:
        raise TooLarge(radius, Config.BALL_RADIUS_CAP, "radius")
    form = CentralAmalgamForm(m)
    classes: Dict[tuple, List[Word]] = {}
    layer = [(Word.identity(), form.key(Word.identity()))]
    classes.setdefault(layer[0][1], []).append(layer[0][0])
    for _ in range(radius):
        nxt = []
        for word, key in layer:
            for letter in LETTER_ORDER:
                extended = (Word(word.letters + (letter,)), form.multiply(key, letter))
                classes.setdefault(extended[1], []).append(extended[0])
                nxt.append(extended)
        layer = nxt
    logger.debug("dihedral ball built", m=m, radius=radius, classes=len(classes))
    return sorted(classes.values(), key=lambda words: (len(words[0]), str(words[0])))


def _simples(m: int) -> List[Tuple[int, int]]:
    return [(start, length) for start in (0, 1) for length in range(1, m)]


def _left_weighted_sequences(m: int, bound: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    yield ()
    frontier: List[Tuple[Tuple[int, int], ...]] = [()]
    for _ in range(bound):
        nxt = []
        for sequence in frontier:
            for start, length in _simples(m):
                if sequence:
                    prev_start, prev_length = sequence[-1]
                    last = prev_start if prev_length % 2 == 1 else 1 - prev_start
                    if start != last:
                        continue
                extended = sequence + ((start, length),)
                nxt.append(extended)
                yield extended
        frontier = nxt


def dihedral_elements(m: int, bound: int) -> List[Word]:
    """Normal-form words Delta^p x_1...x_r with |p| <= bound and r <= bound, shortest first"""
    delta = alternating("a", "b", m, Side.LEFT)
    names = ("a", "b")
    elements = []
    for sequence in _left_weighted_sequences(m, bound):
        body = Word.identity()
        for start, length in sequence:
            body = body * alternating(names[start], names[1 - start], length, Side.LEFT)
        for p in range(-bound, bound + 1):
            elements.append((abs(p) * m + len(body), p, str(body), (delta ** p) * body))
    elements.sort(key=lambda item: item[:3])
    return [word for *_, word in elements]


def triangle_234_search(max_canonical_len: int, commutation_only: bool = False) -> Triangle234Outcome:
    """Look for x in A(I2(4)) with ax = xa and bxb = xbx"""
    if max_canonical_len > Config.SEARCH_234_CAP:
        raise TooLarge(max_canonical_len, Config.SEARCH_234_CAP, "canonical length")
    a, b = Word.generator("a"), Word.generator("b")
    searched = candidates = 0
    parity_holds = True
    for x in dihedral_elements(4, max_canonical_len):
        searched += 1
        if dihedral_nf(4, a * x) != dihedral_nf(4, x * a):
            continue
        if commutation_only:
            if dihedral_nf(4, x).is_identity:
                continue
            return Triangle234Outcome(x, searched, max_canonical_len, 1, True)
        candidates += 1
        xbx, bxb = x * b * x, b * x * b
        if xbx.exponent_sum("b") % 2 != 1 or bxb.exponent_sum("b") % 2 != 0:
            logger.warning("parity obstruction fails", x=str(x))
            parity_holds = False
        if dihedral_nf(4, bxb) == dihedral_nf(4, xbx):
            logger.info("braid solution found", x=str(x))
            return Triangle234Outcome(x, searched, max_canonical_len, candidates, parity_holds)
    logger.debug("(2,3,4) search exhausted", bound=max_canonical_len,
                 searched=searched, candidates=candidates)
    return Triangle234Outcome(None, searched, max_canonical_len, candidates, parity_holds)


def abelianization_classes(g: LabeledGraph) -> AbelianizationResult:
    """Odd labels identify generators; everything else abelianizes to a commutation"""
    classes = odd_classes(g)
    class_of = {v: i for i, cls in enumerate(classes) for v in sorted(cls)}
    return AbelianizationResult(rank=len(classes), class_of=class_of)


def induced_cycles(g: LabeledGraph, min_length: int = 4) -> Iterator[Tuple[str, ...]]:
    """Vertex sets inducing a cycle in the finite-label view, by brute force"""
    for size in range(min_length, len(g) + 1):
        for subset in itertools.combinations(g.vertices, size):
            degree = {v: sum(1 for w in subset if w != v and g.label(v, w).is_finite) for v in subset}
            if any(d != 2 for d in degree.values()):
                continue
            # 2-regular: a single cycle iff connected
            seen = {subset[0]}
            stack = [subset[0]]
            while stack:
                v = stack.pop()
                for w in subset:
                    if w not in seen and w != v and g.label(v, w).is_finite:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == size:
                yield subset


def is_chordal_bruteforce(g: LabeledGraph) -> bool:
    return next(induced_cycles(g), None) is None
