"""
Ordinary retractions onto standard parabolic subgroups

Builds the odd-edge generator maps, verifies that they respect every defining
relation, classifies graphs by their triangles (FC case) or by exhaustive
verification (general case), and reports the composition trichotomy
"""

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import structlog

from .config import Config
from .coxeter_graph import (Label, LabelLike, LabeledGraph, first_odd_odd_vertex, sorted_triple,
                            triangle_labels)
from .errors import (AmbiguousOddTarget, ArtinValidationError, InconsistentResult, NotAdmissible,
                     NotFCType, NotOddOddFree, TooLarge)
from .finite_type import first_non_spherical_clique
from .normal_forms import UNSUPPORTED, dihedral_nf, words_equal
from .words import GeneratorMap, Side, Word, alternating, check_letters, reduce_free

logger = structlog.get_logger(__name__)


class TriangleReason(Enum):
    """Why a triangle forbids retractions"""
    INFINITY_ODD_EVEN = "InfinityOddEven"
    INFINITY_ODD_ODD = "InfinityOddOdd"
    SPH_233 = "Sph233"
    SPH_234 = "Sph234"
    SPH_235 = "Sph235"
    NOT_FC = "NotFC"


@dataclass(frozen=True)
class OffendingTriangle:
    subset: Tuple[str, str, str]
    labels: Tuple[Label, Label, Label]
    reason: TriangleReason


@dataclass
class AdmissibilityReport:
    """Triangle-level verdict on retractions for FC graphs"""
    admits: bool
    offending_triangles: List[OffendingTriangle] = field(default_factory=list)


@dataclass(frozen=True)
class RetractionCheck:
    """valid is None when some relation could not be decided"""
    valid: Optional[bool]
    witness: Optional[Tuple[str, str]] = None

    def __bool__(self) -> bool:
        return bool(self.valid)


@dataclass(frozen=True)
class OrdinaryFailure:
    """First subset without an ordinary retraction"""
    subset: FrozenSet[str]
    reason: str
    vertex: Optional[str] = None
    edge: Optional[Tuple[str, str]] = None


class TrichotomyCase(Enum):
    ONE = "One"
    TRIPLE_EQUAL = "TripleEqual"


@dataclass(frozen=True)
class TrichotomyReport:
    """Values of rho_{X and Y}(s), rho_X(rho_Y(s)) and rho_Y(rho_X(s)); None is the identity"""
    s: str
    case: TrichotomyCase
    value_intersection: Optional[str]
    value_xy: Optional[str]
    value_yx: Optional[str]
    exceptional: bool


def classify_triangle(labels: Sequence[LabelLike]) -> Optional[TriangleReason]:
    """None for (2,2,k), (2m,2n,inf) and (k,inf,inf); otherwise the obstruction"""
    low, mid, high = sorted_triple(Label.of(raw) for raw in labels)
    infinite = sum(1 for lab in (low, mid, high) if lab.is_infinite)
    if infinite >= 2:
        return None
    if infinite == 1:
        if low.is_even and mid.is_even:
            return None
        if low.is_odd and mid.is_odd:
            return TriangleReason.INFINITY_ODD_ODD
        return TriangleReason.INFINITY_ODD_EVEN
    values = (low.value, mid.value, high.value)
    if values[:2] == (2, 2):
        return None
    return {
        (2, 3, 3): TriangleReason.SPH_233,
        (2, 3, 4): TriangleReason.SPH_234,
        (2, 3, 5): TriangleReason.SPH_235,
    }.get(values, TriangleReason.NOT_FC)


def admits_retractions_fc(g: LabeledGraph) -> AdmissibilityReport:
    """Triangle characterisation of retractions for FC-type graphs"""
    clique = first_non_spherical_clique(g)
    if clique is not None:
        raise NotFCType(clique)
    offending = []
    for subset, triple in triangle_labels(g):
        reason = classify_triangle(triple)
        if reason is not None:
            offending.append(OffendingTriangle(subset, triple, reason))
            logger.debug("triangle rejected", subset=subset,
                         labels=[str(lab) for lab in triple], reason=reason.value)
    return AdmissibilityReport(admits=not offending, offending_triangles=offending)


def _relation_images_equal(g: LabeledGraph, p: Optional[str], q: Optional[str], length: int) -> bool:
    """Does l(p,q) = l(q,p) hold in A_{p,q}? None is the identity"""
    if p is None and q is None or p == q:
        return True
    if p is None or q is None:
        # x^floor(l/2) against x^ceil(l/2)
        return length % 2 == 0
    left = alternating(p, q, length, Side.LEFT)
    right = alternating(q, p, length, Side.LEFT)
    between = g.label(p, q)
    if between.is_infinite:
        return reduce_free(left) == reduce_free(right)
    return dihedral_nf(between, left, (p, q)) == dihedral_nf(between, right, (p, q))


def verify_retraction(g: LabeledGraph, subset: Iterable[str], m: GeneratorMap) -> RetractionCheck:
    """Check that m preserves every finite-label relation; the witness is a violated edge"""
    target = g.check_subset(subset)
    if m.target != target:
        raise ArtinValidationError("generator map targets a different subset")
    for u, v, lab in g.pairs():
        if lab.is_infinite:
            continue
        if not _relation_images_equal(g, m.image(u), m.image(v), lab.value):
            return RetractionCheck(False, (u, v))
    return RetractionCheck(True)


def verify_word_map(g: LabeledGraph, subset: Iterable[str], images: Mapping[str, Word]) -> RetractionCheck:
    """Check that arbitrary word images define a retraction A_S -> A_X"""
    target = g.check_subset(subset)
    for vertex in g.vertices:
        if vertex not in images:
            raise ArtinValidationError(f"no image given for '{vertex}'")
        check_letters(images[vertex], target)

    undecided = None
    for x in sorted(target):
        verdict = words_equal(g, target, images[x], Word.generator(x))
        if verdict is UNSUPPORTED:
            undecided = undecided or (x, x)
        elif not verdict:
            return RetractionCheck(False, (x, x))
    for u, v, lab in g.pairs():
        if lab.is_infinite:
            continue
        left = alternating(images[u], images[v], lab.value, Side.LEFT)
        right = alternating(images[v], images[u], lab.value, Side.LEFT)
        verdict = words_equal(g, target, left, right)
        if verdict is UNSUPPORTED:
            undecided = undecided or (u, v)
        elif not verdict:
            return RetractionCheck(False, (u, v))
    if undecided is not None:
        return RetractionCheck(None, undecided)
    return RetractionCheck(True)


def odd_triangle_violations(g: LabeledGraph) -> List[Tuple[str, str, str]]:
    """Triangles with two odd labels at a vertex and a closing label that is not odd"""
    found = set()
    for v in g.vertices:
        odd = sorted(g.neighbours(v, lambda lab: lab.is_odd))
        for a, c in itertools.combinations(odd, 2):
            if not g.label(a, c).is_odd:
                found.add(tuple(sorted((a, v, c))))
    return sorted(found)


class RetractionEngine:
    """Ordinary retractions of one graph, with per-subset caching"""

    def __init__(self, graph: LabeledGraph, max_vertices: Optional[int] = None):
        self.graph = graph
        self.max_vertices = Config.MAX_SUBSET_VERTICES if max_vertices is None else max_vertices
        self._maps: Dict[FrozenSet[str], GeneratorMap] = {}
        self._failure_computed = False
        self._failure: Optional[OrdinaryFailure] = None
        self._fc_report: Optional[AdmissibilityReport] = None
        self._fc_checked = False
        self.logger = structlog.get_logger(f"{__name__}.{self.__class__.__name__}")

    def ordinary_map(self, subset: Iterable[str]) -> GeneratorMap:
        """rho_X: fix X, send v to its odd neighbour in X, otherwise to the identity"""
        target = self.graph.check_subset(subset)
        cached = self._maps.get(target)
        if cached is not None:
            return cached
        images: Dict[str, Optional[str]] = {}
        for v in self.graph.vertices:
            if v in target:
                images[v] = v
                continue
            odd_targets = sorted(t for t in target if self.graph.label(v, t).is_odd)
            if len(odd_targets) > 1:
                raise AmbiguousOddTarget(v, odd_targets)
            images[v] = odd_targets[0] if odd_targets else None
        result = GeneratorMap(self.graph, target, images)
        self._maps[target] = result
        return result

    def first_failure(self) -> Optional[OrdinaryFailure]:
        """First subset (by size, then lexicographically) without an ordinary retraction"""
        if self._failure_computed:
            return self._failure
        n = len(self.graph)
        if n > self.max_vertices:
            raise TooLarge(n, self.max_vertices, "graph")
        failure = None
        checked = 0
        for size in range(n + 1):
            for subset in itertools.combinations(self.graph.vertices, size):
                checked += 1
                target = frozenset(subset)
                try:
                    m = self.ordinary_map(target)
                except AmbiguousOddTarget as exc:
                    failure = OrdinaryFailure(target, "ambiguous odd target", vertex=exc.vertex)
                    break
                check = verify_retraction(self.graph, target, m)
                if not check:
                    failure = OrdinaryFailure(target, "relation violated", edge=check.witness)
                    break
            if failure is not None:
                break
        self.logger.debug("ordinary retractions checked", vertices=n, subsets=checked,
                          admits=failure is None)
        self._failure = failure
        self._failure_computed = True
        return failure

    def admits_ordinary_all(self) -> bool:
        return self.first_failure() is None

    def fc_report(self) -> Optional[AdmissibilityReport]:
        """Triangle verdict when the graph is of FC type, otherwise None"""
        if not self._fc_checked:
            try:
                self._fc_report = admits_retractions_fc(self.graph)
            except NotFCType:
                self._fc_report = None
            self._fc_checked = True
        return self._fc_report

    def require_admissible(self) -> None:
        """FC graphs are decided by their triangles; others by the exhaustive subset check"""
        report = self.fc_report()
        if report is not None:
            if not report.admits:
                first = report.offending_triangles[0]
                labels = ",".join(str(lab) for lab in first.labels)
                raise NotAdmissible(first.subset, f"triangle ({labels}) is {first.reason.value}")
            return
        failure = self.first_failure()
        if failure is not None:
            detail = failure.reason
            if failure.edge:
                detail += f" on edge {failure.edge[0]}-{failure.edge[1]}"
            if failure.vertex:
                detail += f" at '{failure.vertex}'"
            raise NotAdmissible(failure.subset, detail)

    def require_odd_odd_free(self) -> None:
        vertex = first_odd_odd_vertex(self.graph)
        if vertex is not None:
            raise NotOddOddFree(vertex)

    def _rho(self, subset: FrozenSet[str], value: Optional[str]) -> Optional[str]:
        return None if value is None else self.ordinary_map(subset).image(value)

    def trichotomy(self, x_set: Iterable[str], y_set: Iterable[str], s: str) -> TrichotomyReport:
        """Compare rho_{X and Y}, rho_X o rho_Y and rho_Y o rho_X on a generator"""
        self.require_odd_odd_free()
        self.require_admissible()
        xs = self.graph.check_subset(x_set)
        ys = self.graph.check_subset(y_set)
        self.graph.check_subset([s])

        value_intersection = self._rho(xs & ys, s)
        value_xy = self._rho(xs, self._rho(ys, s))
        value_yx = self._rho(ys, self._rho(xs, s))

        def odd_into(source: FrozenSet[str], other: FrozenSet[str]) -> bool:
            return s in source - other and any(
                self.graph.label(s, t).is_odd for t in other - source)

        exceptional = odd_into(xs, ys) or odd_into(ys, xs)
        if value_intersection == value_xy == value_yx:
            case = TrichotomyCase.TRIPLE_EQUAL
        else:
            case = TrichotomyCase.ONE
            if value_intersection is not None:
                raise InconsistentResult(f"trichotomy broken at '{s}'")
        return TrichotomyReport(s, case, value_intersection, value_xy, value_yx, exceptional)


def ordinary_map(g: LabeledGraph, subset: Iterable[str]) -> GeneratorMap:
    return RetractionEngine(g).ordinary_map(subset)


def admits_ordinary_all(g: LabeledGraph, max_subsets: Optional[int] = None) -> bool:
    """Exhaustive verification of ordinary retractions onto every subset"""
    return RetractionEngine(g, max_subsets).admits_ordinary_all()


def first_ordinary_failure(g: LabeledGraph, max_subsets: Optional[int] = None) -> Optional[OrdinaryFailure]:
    return RetractionEngine(g, max_subsets).first_failure()


def trichotomy(g: LabeledGraph, x_set: Iterable[str], y_set: Iterable[str], s: str) -> TrichotomyReport:
    return RetractionEngine(g).trichotomy(x_set, y_set, s)
