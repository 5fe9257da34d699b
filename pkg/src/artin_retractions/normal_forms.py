"""
Dihedral Garside normal forms and a recursive word-equality oracle

In the Artin group of type I2(m) every element is uniquely
Delta^p x_1 ... x_r with p an integer, each x_i a proper alternating prefix
of Delta, and the last letter of x_i equal to the first letter of x_{i+1}
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence, Tuple, Union

import networkx as nx

from .coxeter_graph import Label, LabeledGraph, irreducible_components
from .errors import ArtinValidationError, UnknownGenerator
from .words import Side, Word, alternating, check_letters, reduce_free

logger = logging.getLogger(__name__)

DEFAULT_GENERATORS = ("a", "b")


class Unsupported(Enum):
    """Equality could not be decided for this graph"""
    UNSUPPORTED = "unsupported"


UNSUPPORTED = Unsupported.UNSUPPORTED


@dataclass(frozen=True)
class DihedralNF:
    """Delta^power followed by left-weighted positive simple factors"""
    m: int
    generators: Tuple[str, str]
    power: int
    factors: Tuple[Word, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def is_identity(self) -> bool:
        return self.power == 0 and not self.factors

    def garside_word(self) -> Word:
        a, b = self.generators
        return alternating(a, b, self.m, Side.LEFT)

    def to_word(self) -> Word:
        """A word representing the same element"""
        word = self.garside_word() ** self.power
        for factor in self.factors:
            word = word * factor
        return word

    def __str__(self) -> str:
        parts = []
        if self.power:
            parts.append(f"Δ^{self.power}")
        parts.extend(f"({factor})" for factor in self.factors)
        return " · ".join(parts) if parts else "1"


def _label_value(m: Union[int, Label]) -> int:
    value = m.value if isinstance(m, Label) else m
    if value is None:
        raise ArtinValidationError("dihedral normal forms need a finite label")
    if isinstance(value, bool) or not isinstance(value, int) or value < 2:
        raise ArtinValidationError(f"dihedral label must be an integer >= 2, got {value!r}")
    return value


class _GreedyForm:
    """Mutable normal form Delta^power s_1 ... s_r; simples are (first letter index, length)"""

    def __init__(self, m: int):
        self.m = m
        self.power = 0
        self.simples: List[List[int]] = []

    def _twist(self) -> None:
        # conjugation by Delta swaps the generators exactly when m is odd
        if self.m % 2 == 1:
            for simple in self.simples:
                simple[0] = 1 - simple[0]

    def push(self, index: int) -> None:
        """Right-multiply by a positive generator"""
        if self.simples:
            start, length = self.simples[-1]
            last = start if length % 2 == 1 else 1 - start
            if last != index:
                if length + 1 == self.m:
                    self.simples.pop()
                    self.power += 1
                    self._twist()
                else:
                    self.simples[-1][1] = length + 1
                return
        self.simples.append([index, 1])

    def push_inverse(self, index: int) -> None:
        """Right-multiply by an inverse generator: x^-1 = (x^-1 Delta) Delta^-1"""
        other = 1 - index
        for position in range(self.m - 1):
            self.push(other if position % 2 == 0 else index)
        self.power -= 1
        self._twist()


def dihedral_nf(m: Union[int, Label], w: Word,
                generators: Sequence[str] = DEFAULT_GENERATORS) -> DihedralNF:
    """Left-greedy Garside normal form of w in the Artin group of type I2(m)"""
    order = _label_value(m)
    a, b = generators
    index = {a: 0, b: 1}
    form = _GreedyForm(order)
    for letter in w.letters:
        if letter.generator not in index:
            raise UnknownGenerator(letter.generator)
        if letter.sign > 0:
            form.push(index[letter.generator])
        else:
            form.push_inverse(index[letter.generator])

    names = (a, b)
    factors = tuple(
        alternating(names[start], names[1 - start], length, Side.LEFT)
        for start, length in form.simples
    )
    return DihedralNF(order, (a, b), form.power, factors)


def _is_trivial(h: LabeledGraph, w: Word) -> Union[bool, Unsupported]:
    w = reduce_free(w)
    if w.is_identity:
        return True

    components = irreducible_components(h)
    if len(components) > 1:
        # direct product: project onto each irreducible factor
        for component in components:
            verdict = _is_trivial(h.induced(component), w.restrict(component))
            if verdict is not True:
                return verdict
        return True

    if len(h) == 1:
        return w.exponent_sum(h.vertices[0]) == 0

    free_factors = [frozenset(c) for c in _finite_view_components(h)]
    if len(free_factors) > 1:
        return _free_product_trivial(h, free_factors, w)

    if len(h) == 2:
        u, v = h.vertices
        return dihedral_nf(h.label(u, v), w, (u, v)).is_identity

    return UNSUPPORTED


def _finite_view_components(h: LabeledGraph):
    view = h.to_networkx(lambda lab: lab.is_finite)
    return sorted(nx.connected_components(view), key=lambda c: sorted(c))


def _free_product_trivial(h: LabeledGraph, factors, w: Word) -> Union[bool, Unsupported]:
    """Reduce the syllable sequence, deleting syllables trivial in their factor"""
    owner = {v: i for i, factor in enumerate(factors) for v in factor}
    syllables: List[Tuple[int, Word]] = []
    for letter in w.letters:
        part = owner[letter.generator]
        if syllables and syllables[-1][0] == part:
            syllables[-1] = (part, syllables[-1][1] * Word((letter,)))
        else:
            syllables.append((part, Word((letter,))))

    progress = True
    while progress and syllables:
        progress = False
        for i, (part, syllable) in enumerate(syllables):
            verdict = _is_trivial(h.induced(factors[part]), syllable)
            if verdict is UNSUPPORTED:
                return UNSUPPORTED
            if verdict:
                del syllables[i]
                if 0 < i < len(syllables) and syllables[i - 1][0] == syllables[i][0]:
                    merged = syllables[i - 1][1] * syllables[i][1]
                    syllables[i - 1:i + 1] = [(syllables[i][0], merged)]
                progress = True
                break
    return not syllables


def words_equal(g: LabeledGraph, subset, w1: Word, w2: Word) -> Union[bool, Unsupported]:
    """Decide w1 = w2 in the standard parabolic A_X, or return UNSUPPORTED"""
    chosen = g.check_subset(subset)
    check_letters(w1, chosen)
    check_letters(w2, chosen)
    verdict = _is_trivial(g.induced(chosen), w1 * w2.inverse())
    if verdict is UNSUPPORTED:
        logger.debug("word problem unsupported on %r", g.induced(chosen))
    return verdict
