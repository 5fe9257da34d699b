"""
Spherical and FC type recognition
Finite Coxeter groups are recognised twice: by matching irreducible components
against the classification list, and by positive-definiteness of the cosine matrix
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import FrozenSet, List, Optional, Tuple

import mpmath
import networkx as nx
import sympy

from .config import Config
from .coxeter_graph import TWO, Convention, LabeledGraph, irreducible_components
from .errors import InconsistentResult, NotIrreducible, TooLarge

logger = logging.getLogger(__name__)


class TypeFamily(Enum):
    """Families of the finite Coxeter classification"""
    A = "A"
    B = "B"
    D = "D"
    E = "E"
    F = "F"
    H = "H"
    I2 = "I2"
    Z = "Z"
    NON_SPHERICAL = "NonSpherical"


@dataclass(frozen=True)
class CoxeterTypeName:
    """Name of an irreducible Coxeter type; parameter is the rank, or m for I2"""
    family: TypeFamily
    parameter: Optional[int] = None

    @property
    def is_spherical(self) -> bool:
        return self.family is not TypeFamily.NON_SPHERICAL

    def __str__(self) -> str:
        if self.family is TypeFamily.I2:
            return f"I2({self.parameter})"
        if self.family in (TypeFamily.Z, TypeFamily.NON_SPHERICAL):
            return self.family.value
        return f"{self.family.value}{self.parameter}"


NON_SPHERICAL = CoxeterTypeName(TypeFamily.NON_SPHERICAL)
INFINITE_CYCLIC = CoxeterTypeName(TypeFamily.Z)


def _path(labels: List[int], extra: Optional[Tuple[int, int]] = None) -> LabeledGraph:
    """Path template 0-1-2-... with the given labels, plus an optional pendant (attach_to, label)"""
    n = len(labels) + 1 + (1 if extra else 0)
    names = [str(i) for i in range(n)]
    edges = {(str(i), str(i + 1)): lab for i, lab in enumerate(labels)}
    if extra:
        attach, lab = extra
        edges[(str(attach), str(n - 1))] = lab
    return LabeledGraph(names, edges, Convention.NO_TWO_EDGE)


def _templates(n: int) -> List[Tuple[CoxeterTypeName, LabeledGraph]]:
    """Classification list restricted to rank n >= 3"""
    found = [
        (CoxeterTypeName(TypeFamily.A, n), _path([3] * (n - 1))),
        (CoxeterTypeName(TypeFamily.B, n), _path([4] + [3] * (n - 2))),
    ]
    if n >= 4:
        found.append((CoxeterTypeName(TypeFamily.D, n), _path([3] * (n - 2), (n - 3, 3))))
    if n in (6, 7, 8):
        found.append((CoxeterTypeName(TypeFamily.E, n), _path([3] * (n - 2), (2, 3))))
    if n == 4:
        found.append((CoxeterTypeName(TypeFamily.F, 4), _path([3, 4, 3])))
        found.append((CoxeterTypeName(TypeFamily.H, 4), _path([5, 3, 3])))
    if n == 3:
        found.append((CoxeterTypeName(TypeFamily.H, 3), _path([5, 3])))
    return found


@lru_cache(maxsize=None)
def _template_views(n: int) -> Tuple[Tuple[CoxeterTypeName, nx.Graph], ...]:
    return tuple((name, graph.to_networkx(lambda lab: lab != TWO)) for name, graph in _templates(n))


def _same_label(first, second) -> bool:
    return first["label"] == second["label"]


def classify_irreducible(g: LabeledGraph) -> CoxeterTypeName:
    """Finite type name of an irreducible graph, or NonSpherical"""
    components = irreducible_components(g)
    if len(components) != 1:
        raise NotIrreducible(components)

    n = len(g)
    if n == 1:
        return INFINITE_CYCLIC
    if any(lab.is_infinite for _, _, lab in g.pairs()):
        return NON_SPHERICAL
    if n == 2:
        (_, _, lab), = list(g.pairs())
        if lab.value == 3:
            return CoxeterTypeName(TypeFamily.A, 2)
        if lab.value == 4:
            return CoxeterTypeName(TypeFamily.B, 2)
        return CoxeterTypeName(TypeFamily.I2, lab.value)

    view = g.to_networkx(lambda lab: lab != TWO)
    if view.number_of_edges() != n - 1:
        return NON_SPHERICAL
    for name, template in _template_views(n):
        if nx.is_isomorphic(view, template, edge_match=_same_label):
            return name
    return NON_SPHERICAL


def cosine_matrix(g: LabeledGraph) -> sympy.Matrix:
    """B[s][t] = -cos(pi/m_st), with -1 for infinite labels and 1 on the diagonal"""
    n = len(g)
    index = {v: i for i, v in enumerate(g.vertices)}
    entries = sympy.eye(n)
    for u, v, lab in g.pairs():
        if lab.is_infinite:
            value = sympy.Integer(-1)
        elif lab.value in (2, 3, 4, 6):
            value = -sympy.cos(sympy.pi / lab.value)
        else:
            value = -sympy.cos(sympy.pi / lab.value).evalf(Config.PRECISION_DIGITS)
        entries[index[u], index[v]] = value
        entries[index[v], index[u]] = value
    return entries


@lru_cache(maxsize=65536)
def _definiteness(key: Tuple[int, Tuple[Optional[int], ...]], tolerance: float,
                  digits: int) -> Optional[bool]:
    n, values = key
    with mpmath.workdps(digits):
        matrix = mpmath.eye(n)
        pairs = iter(values)
        for i in range(n):
            for j in range(i + 1, n):
                m = next(pairs)
                entry = mpmath.mpf(-1) if m is None else -mpmath.cos(mpmath.pi / m)
                matrix[i, j] = entry
                matrix[j, i] = entry
        for k in range(1, n + 1):
            minor = mpmath.det(mpmath.matrix([[matrix[i, j] for j in range(k)] for i in range(k)]))
            if abs(minor) < tolerance:
                return None
            if minor < 0:
                return False
    return True


def positive_definite(g: LabeledGraph, tolerance: Optional[float] = None) -> Optional[bool]:
    """Leading-minor test of the cosine matrix; None when some minor is within tolerance of 0"""
    values = tuple(lab.value for _, _, lab in g.pairs())
    return _definiteness((len(g), values),
                         Config.MINOR_TOLERANCE if tolerance is None else tolerance,
                         Config.PRECISION_DIGITS)


def spherical_components(g: LabeledGraph) -> List[Tuple[FrozenSet[str], CoxeterTypeName]]:
    """Irreducible components with their classification names"""
    return [(component, classify_irreducible(g.induced(component)))
            for component in irreducible_components(g)]


def is_spherical(g: LabeledGraph) -> bool:
    """True iff the Coxeter group of g is finite"""
    by_classification = all(name.is_spherical for _, name in spherical_components(g))
    definite = positive_definite(g)
    if definite is not None and definite != by_classification:
        logger.error("sphericity mismatch on %r: classification=%s minors=%s",
                     g, by_classification, definite)
        raise InconsistentResult(f"classification and cosine-matrix test disagree on {g!r}")
    return by_classification


def maximal_finite_cliques(g: LabeledGraph, clique_cap: Optional[int] = None) -> List[FrozenSet[str]]:
    """Maximal cliques of the finite-label graph, sorted"""
    cap = Config.CLIQUE_CAP if clique_cap is None else clique_cap
    if len(g) > cap:
        raise TooLarge(len(g), cap, "graph")
    view = g.to_networkx(lambda lab: lab.is_finite)
    return sorted((frozenset(c) for c in nx.find_cliques(view)), key=lambda c: sorted(c))


def first_non_spherical_clique(g: LabeledGraph,
                               clique_cap: Optional[int] = None) -> Optional[FrozenSet[str]]:
    for clique in maximal_finite_cliques(g, clique_cap):
        if not is_spherical(g.induced(clique)):
            return clique
    return None


def is_fc_type(g: LabeledGraph, clique_cap: Optional[int] = None) -> bool:
    """Every complete finite-label subgraph generates a spherical parabolic"""
    return first_non_spherical_clique(g, clique_cap) is None
