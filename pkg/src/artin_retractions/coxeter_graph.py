"""
Labeled Coxeter graphs
Immutable graph model with a total label map, the three drawing conventions,
and the combinatorial predicates used throughout the toolkit
"""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

import networkx as nx

from .errors import ArtinValidationError, BadLabel, SelfPair, UnknownVertex

logger = logging.getLogger(__name__)


@total_ordering
@dataclass(frozen=True)
class Label:
    """Edge label: an integer >= 2, or infinity when value is None"""
    value: Optional[int]

    def __post_init__(self):
        if self.value is not None:
            if isinstance(self.value, bool) or not isinstance(self.value, int) or self.value < 2:
                raise BadLabel(str(self.value))

    @classmethod
    def parse(cls, text: str) -> "Label":
        """Parse 'inf' or a decimal integer >= 2"""
        token = text.strip()
        if token == "inf":
            return INFINITY
        if not token.isdigit():
            raise BadLabel(text)
        return cls(int(token))

    @classmethod
    def of(cls, raw: "LabelLike") -> "Label":
        if isinstance(raw, Label):
            return raw
        if isinstance(raw, str):
            return cls.parse(raw)
        if isinstance(raw, float) and raw == float("inf"):
            return INFINITY
        if isinstance(raw, int) and not isinstance(raw, bool):
            return cls(raw)
        raise BadLabel(repr(raw))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    @property
    def is_odd(self) -> bool:
        return self.value is not None and self.value % 2 == 1

    @property
    def is_even(self) -> bool:
        return self.value is not None and self.value % 2 == 0

    def sort_key(self) -> Tuple[int, int]:
        return (1, 0) if self.value is None else (0, self.value)

    def __lt__(self, other: "Label") -> bool:
        if not isinstance(other, Label):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)


INFINITY = Label(None)
TWO = Label(2)

LabelLike = Union[Label, int, str, float]


class Convention(Enum):
    """Which pairs a drawing omits"""
    NO_INFINITY_EDGE = "no-inf"
    NO_TWO_EDGE = "no-2"
    FULL_EDGE = "full"


def _pair(u: str, v: str) -> FrozenSet[str]:
    return frozenset((u, v))


class LabeledGraph:
    """Finite vertex set with a label on every unordered pair of distinct vertices"""

    __slots__ = ("_vertices", "_vertex_set", "_labels")

    def __init__(self, vertices: Iterable[str],
                 labels: Optional[Mapping[Tuple[str, str], LabelLike]] = None,
                 convention: Convention = Convention.FULL_EDGE):
        names = []
        for name in vertices:
            if not isinstance(name, str) or not name:
                raise ArtinValidationError(f"vertex names must be non-empty strings, got {name!r}")
            names.append(name)
        self._vertices: Tuple[str, ...] = tuple(sorted(set(names)))
        self._vertex_set: FrozenSet[str] = frozenset(self._vertices)

        stored: Dict[FrozenSet[str], Label] = {}
        for (u, v), raw in (labels or {}).items():
            self._check_pair(u, v)
            value = Label.of(raw)
            key = _pair(u, v)
            if key in stored and stored[key] != value:
                raise ArtinValidationError(f"conflicting labels for ({u}, {v})")
            stored[key] = value

        for u, v in itertools.combinations(self._vertices, 2):
            key = _pair(u, v)
            if key in stored:
                continue
            if convention is Convention.NO_INFINITY_EDGE:
                stored[key] = INFINITY
            elif convention is Convention.NO_TWO_EDGE:
                stored[key] = TWO
            else:
                raise ArtinValidationError(
                    f"pair ({u}, {v}) has no label and the convention is 'full'"
                )
        self._labels = stored

    def _check_pair(self, u: str, v: str) -> None:
        for name in (u, v):
            if name not in self._vertex_set:
                raise UnknownVertex(name)
        if u == v:
            raise SelfPair(u)

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._vertices

    @property
    def vertex_set(self) -> FrozenSet[str]:
        return self._vertex_set

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self._vertex_set

    def __iter__(self) -> Iterator[str]:
        return iter(self._vertices)

    def label(self, u: str, v: str) -> Label:
        """Symmetric label m_{u,v}"""
        self._check_pair(u, v)
        return self._labels[_pair(u, v)]

    def pairs(self) -> Iterator[Tuple[str, str, Label]]:
        """All unordered pairs (u < v) with their labels, in lexicographic order"""
        for u, v in itertools.combinations(self._vertices, 2):
            yield u, v, self._labels[_pair(u, v)]

    def check_subset(self, subset: Iterable[str]) -> FrozenSet[str]:
        chosen = frozenset(subset)
        for name in sorted(chosen):
            if name not in self._vertex_set:
                raise UnknownVertex(name)
        return chosen

    def induced(self, subset: Iterable[str]) -> "LabeledGraph":
        """Subgraph induced by a vertex subset"""
        chosen = self.check_subset(subset)
        labels = {(u, v): lab for u, v, lab in self.pairs() if u in chosen and v in chosen}
        return LabeledGraph(chosen, labels)

    def link_star(self, s: str) -> Tuple[FrozenSet[str], FrozenSet[str]]:
        """Link and star of s in the finite-label view"""
        if s not in self._vertex_set:
            raise UnknownVertex(s)
        link = frozenset(v for v in self._vertices if v != s and self._labels[_pair(s, v)].is_finite)
        return link, link | {s}

    def neighbours(self, s: str, predicate: Callable[[Label], bool]) -> FrozenSet[str]:
        if s not in self._vertex_set:
            raise UnknownVertex(s)
        return frozenset(v for v in self._vertices
                         if v != s and predicate(self._labels[_pair(s, v)]))

    def to_networkx(self, predicate: Callable[[Label], bool]) -> nx.Graph:
        """Undirected view keeping the pairs whose label satisfies predicate"""
        view = nx.Graph()
        view.add_nodes_from(self._vertices)
        for u, v, lab in self.pairs():
            if predicate(lab):
                view.add_edge(u, v, label=str(lab))
        return view

    def relabel(self, mapping: Mapping[str, str]) -> "LabeledGraph":
        """Rename vertices; the mapping must be injective on the vertex set"""
        renamed = [mapping.get(v, v) for v in self._vertices]
        if len(set(renamed)) != len(renamed):
            raise ArtinValidationError("vertex renaming is not injective")
        labels = {(mapping.get(u, u), mapping.get(v, v)): lab for u, v, lab in self.pairs()}
        return LabeledGraph(renamed, labels)

    def _key(self) -> Tuple[Tuple[str, ...], Tuple[Tuple[str, str, Optional[int]], ...]]:
        return self._vertices, tuple((u, v, lab.value) for u, v, lab in self.pairs())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        edges = ", ".join(f"{u}-{v}:{lab}" for u, v, lab in self.pairs() if lab != TWO)
        return f"LabeledGraph({{{', '.join(self._vertices)}}}; {edges or 'all 2'})"


def _components(view: nx.Graph) -> List[FrozenSet[str]]:
    return sorted((frozenset(c) for c in nx.connected_components(view)), key=lambda c: sorted(c))


def irreducible_components(g: LabeledGraph) -> List[FrozenSet[str]]:
    """Components of the graph whose edges are the pairs with label != 2"""
    return _components(g.to_networkx(lambda lab: lab != TWO))


def odd_classes(g: LabeledGraph) -> List[FrozenSet[str]]:
    """Components of the graph whose edges are the odd-labelled pairs"""
    return _components(g.to_networkx(lambda lab: lab.is_odd))


def restrict_le2(g: LabeledGraph) -> LabeledGraph:
    """Keep label-2 pairs, send every other pair to infinity"""
    labels = {(u, v): (TWO if lab == TWO else INFINITY) for u, v, lab in g.pairs()}
    return LabeledGraph(g.vertices, labels)


def lex_bfs(g: LabeledGraph) -> List[str]:
    """Lexicographic breadth-first order of the finite-label view"""
    adjacency = {v: g.neighbours(v, lambda lab: lab.is_finite) for v in g.vertices}
    n = len(g)
    marks: Dict[str, List[int]] = {v: [] for v in g.vertices}
    order: List[str] = []
    remaining = list(g.vertices)
    for step in range(n):
        best = remaining[0]
        for candidate in remaining[1:]:
            if marks[candidate] > marks[best]:
                best = candidate
        remaining.remove(best)
        order.append(best)
        for w in adjacency[best]:
            if w in marks and w not in order:
                marks[w].append(n - step)
    return order


def is_chordal(g: LabeledGraph) -> bool:
    """Every induced cycle of length >= 4 in the finite-label view has a chord"""
    order = lex_bfs(g)
    position = {v: i for i, v in enumerate(order)}
    adjacency = {v: g.neighbours(v, lambda lab: lab.is_finite) for v in g.vertices}
    # reversed LexBFS order is a perfect elimination ordering iff the graph is chordal
    for v in order:
        earlier = [w for w in adjacency[v] if position[w] < position[v]]
        if not earlier:
            continue
        parent = max(earlier, key=position.__getitem__)
        rest = set(earlier) - {parent}
        if not rest <= adjacency[parent]:
            logger.debug("elimination ordering fails at %s (parent %s)", v, parent)
            return False
    return True


def odd_degree(g: LabeledGraph, s: str) -> int:
    return len(g.neighbours(s, lambda lab: lab.is_odd))


def is_odd_odd_free(g: LabeledGraph) -> bool:
    """No vertex is incident to two odd-labelled edges"""
    return all(odd_degree(g, s) <= 1 for s in g.vertices)


def first_odd_odd_vertex(g: LabeledGraph) -> Optional[str]:
    for s in g.vertices:
        if odd_degree(g, s) > 1:
            return s
    return None


def sorted_triple(labels: Iterable[Label]) -> Tuple[Label, Label, Label]:
    a, b, c = sorted(labels)
    return a, b, c


def triangle_labels(g: LabeledGraph) -> List[Tuple[Tuple[str, str, str], Tuple[Label, Label, Label]]]:
    """One entry per 3-subset: the subset and its label triple sorted with infinity last"""
    entries = []
    for u, v, w in itertools.combinations(g.vertices, 3):
        triple = sorted_triple((g.label(u, v), g.label(v, w), g.label(u, w)))
        entries.append(((u, v, w), triple))
    return entries


def triangle_graph(ab: LabelLike, bc: LabelLike, ca: LabelLike,
                   names: Tuple[str, str, str] = ("a", "b", "c")) -> LabeledGraph:
    """Three-vertex graph with the given labels on (a,b), (b,c), (c,a)"""
    a, b, c = names
    return LabeledGraph(names, {(a, b): ab, (b, c): bc, (c, a): ca})
