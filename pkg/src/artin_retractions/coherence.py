"""
Coherence of Artin groups

Two deciders: the three-condition test on the Coxeter graph, valid for
arbitrary graphs as a criterion, and the chordality test for FC-type graphs
admitting retractions. Right-angled graphs get the classical chordality test.
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import structlog

from .coxeter_graph import INFINITY, TWO, LabeledGraph, is_chordal, restrict_le2
from .errors import NotFCType, NotInScope, NotRAAG
from .retractions import admits_retractions_fc

logger = structlog.get_logger(__name__)


class FailureKind(Enum):
    NOT_CHORDAL = "NotChordal"
    BAD_COMPLETE_SUBGRAPH = "BadCompleteSubgraph"
    FORBIDDEN_SQUARE = "ForbiddenSquare"


class Method(Enum):
    GENERAL_LEMMA = "GeneralLemma"
    FC_THEOREM = "FCTheorem"


@dataclass(frozen=True)
class CoherenceFailure:
    kind: FailureKind
    subset: Tuple[str, ...] = ()
    detail: str = ""


@dataclass(frozen=True)
class CoherenceReport:
    coherent: bool
    failed_condition: Optional[CoherenceFailure]
    via: Method


def _bad_complete_subgraph(g: LabeledGraph) -> Optional[Tuple[str, ...]]:
    """A complete subgraph on 3 or 4 vertices with two labels different from 2"""
    for size in (3, 4):
        for subset in itertools.combinations(g.vertices, size):
            labels = [g.label(u, v) for u, v in itertools.combinations(subset, 2)]
            if all(lab.is_finite for lab in labels) and sum(lab != TWO for lab in labels) >= 2:
                return subset
    return None


def _forbidden_square(g: LabeledGraph) -> Optional[Tuple[str, ...]]:
    """Square of 2-labels whose diagonals are one finite label > 2 and one infinity"""
    for subset in itertools.combinations(g.vertices, 4):
        a = subset[0]
        for c in subset[1:]:
            b, d = [v for v in subset[1:] if v != c]
            diagonals = [(a, c), (b, d)]
            for (p, q), (r, s) in (diagonals, diagonals[::-1]):
                if g.label(p, q) != INFINITY:
                    continue
                chord = g.label(r, s)
                if not chord.is_finite or chord == TWO:
                    continue
                sides = [g.label(p, r), g.label(r, q), g.label(q, s), g.label(s, p)]
                if all(lab == TWO for lab in sides):
                    return subset
    return None


def coherence_general(g: LabeledGraph) -> CoherenceReport:
    """Chordal, at most one non-2 label per complete 3/4-subgraph, no forbidden square"""
    via = Method.GENERAL_LEMMA
    if not is_chordal(g):
        return CoherenceReport(False, CoherenceFailure(FailureKind.NOT_CHORDAL, detail="graph"), via)
    subset = _bad_complete_subgraph(g)
    if subset is not None:
        return CoherenceReport(False, CoherenceFailure(FailureKind.BAD_COMPLETE_SUBGRAPH, subset), via)
    subset = _forbidden_square(g)
    if subset is not None:
        logger.debug("forbidden square", subset=subset)
        return CoherenceReport(False, CoherenceFailure(FailureKind.FORBIDDEN_SQUARE, subset), via)
    return CoherenceReport(True, None, via)


def coherence_fc(g: LabeledGraph) -> CoherenceReport:
    """Coherent iff both the graph and its label-2 part are chordal"""
    try:
        report = admits_retractions_fc(g)
    except NotFCType as exc:
        raise NotInScope(f"graph is not of FC type: {exc}") from exc
    if not report.admits:
        raise NotInScope("graph does not admit retractions to its standard parabolics")
    via = Method.FC_THEOREM
    if not is_chordal(g):
        return CoherenceReport(False, CoherenceFailure(FailureKind.NOT_CHORDAL, detail="graph"), via)
    if not is_chordal(restrict_le2(g)):
        return CoherenceReport(False, CoherenceFailure(FailureKind.NOT_CHORDAL, detail="label-2 subgraph"), via)
    return CoherenceReport(True, None, via)


def droms_raag(g: LabeledGraph) -> bool:
    """Right-angled Artin groups are coherent exactly for chordal graphs"""
    for u, v, lab in g.pairs():
        if lab != TWO and lab != INFINITY:
            raise NotRAAG((u, v), str(lab))
    return is_chordal(g)
