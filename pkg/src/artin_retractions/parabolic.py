"""
Parabolic subgroup calculus

O/C sets, rewriting of intersections of parabolic subgroups, retractions
extended to conjugated parabolics, X-perp, elementary ribbons and bounded
conjugator generation, plus the combinatorial data used by amalgam splittings
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Set, Tuple

import structlog

from .coxeter_graph import TWO, LabeledGraph, irreducible_components
from .errors import InfiniteLabel, InvalidArgument, LabelTooSmall, UnknownVertex
from .retractions import RetractionEngine
from .words import Side, Word, alternating, apply_map, check_letters, reduce_free

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class ParabolicDescriptor:
    """conjugator . A_base . conjugator^-1; the empty base is the trivial subgroup"""
    conjugator: Word
    base: FrozenSet[str]

    def __str__(self) -> str:
        names = ", ".join(sorted(self.base))
        return f"({self.conjugator}) A{{{names}}} ({self.conjugator})^-1"


@dataclass(frozen=True)
class IntersectionRewrite:
    left: ParabolicDescriptor
    right: ParabolicDescriptor
    x: Word
    y: Word


@dataclass(frozen=True)
class OCSets:
    o_xy: FrozenSet[str]
    c_xy: FrozenSet[str]
    o_yx: FrozenSet[str]
    c_yx: FrozenSet[str]


@dataclass(frozen=True)
class AmalgamSplit:
    """A_S = A_star *_{A_link} A_rest"""
    star: FrozenSet[str]
    link: FrozenSet[str]
    rest: FrozenSet[str]


def _odd_connected(g: LabeledGraph, source: FrozenSet[str], other: FrozenSet[str]) -> FrozenSet[str]:
    return frozenset(x for x in source if any(g.label(x, y).is_odd for y in other))


def oc_sets(g: LabeledGraph, x_set: Iterable[str], y_set: Iterable[str]) -> OCSets:
    """O_{X,Y}: elements of X-Y odd-connected to Y-X; C_{X,Y} = (X and Y) plus O_{X,Y}"""
    xs = g.check_subset(x_set)
    ys = g.check_subset(y_set)
    o_xy = _odd_connected(g, xs - ys, ys - xs)
    o_yx = _odd_connected(g, ys - xs, xs - ys)
    common = xs & ys
    return OCSets(o_xy, common | o_xy, o_yx, common | o_yx)


def intersect_rewrite(g: LabeledGraph, f: Word, gw: Word,
                      x_set: Iterable[str], y_set: Iterable[str]) -> IntersectionRewrite:
    """Rewrite f A_X f^-1 and gw A_Y gw^-1 over the C-sets"""
    engine = RetractionEngine(g)
    engine.require_odd_odd_free()
    engine.require_admissible()
    check_letters(f, g.vertices)
    check_letters(gw, g.vertices)
    xs = g.check_subset(x_set)
    ys = g.check_subset(y_set)

    h = reduce_free(f.inverse() * gw)
    x = apply_map(engine.ordinary_map(xs), h)
    k = reduce_free(h.inverse() * x)
    y = apply_map(engine.ordinary_map(ys), k)
    sets = oc_sets(g, xs, ys)
    logger.debug("intersection rewritten", h=str(h), x=str(x), y=str(y))
    return IntersectionRewrite(
        left=ParabolicDescriptor(reduce_free(f * x), sets.c_xy),
        right=ParabolicDescriptor(reduce_free(gw * y), sets.c_yx),
        x=x,
        y=y,
    )


def extended_retraction(g: LabeledGraph, p: ParabolicDescriptor, w: Word) -> Word:
    """f . rho_X(f^-1 w f) . f^-1, freely reduced"""
    engine = RetractionEngine(g)
    engine.require_admissible()
    check_letters(p.conjugator, g.vertices)
    check_letters(w, g.vertices)
    f = p.conjugator
    inner = apply_map(engine.ordinary_map(p.base), f.inverse() * w * f)
    return reduce_free(f * inner * f.inverse())


def x_perp(g: LabeledGraph, x_set: Iterable[str]) -> FrozenSet[str]:
    """Generators outside X commuting with every generator of X"""
    xs = g.check_subset(x_set)
    return frozenset(y for y in g.vertices
                     if y not in xs and all(g.label(y, x) == TWO for x in xs))


def elementary_ribbon(g: LabeledGraph, x: str, y: str) -> Word:
    """y x y ... with m_{x,y} - 1 letters"""
    lab = g.label(x, y)
    if lab.is_infinite:
        raise InfiniteLabel(x, y)
    if lab == TWO:
        raise LabelTooSmall(x, y)
    return alternating(y, x, lab.value - 1, Side.LEFT)


def _elementary_steps(g: LabeledGraph, subset: FrozenSet[str]) -> Iterator[Tuple[Word, FrozenSet[str]]]:
    """Conjugators c with c A_Z c^-1 standard, one elementary ribbon each"""
    for x in sorted(subset):
        if any(g.label(x, z) != TWO for z in subset if z != x):
            continue
        for y in g.vertices:
            if y in subset:
                continue
            lab = g.label(x, y)
            if lab.is_infinite or lab == TWO:
                continue
            enlarged = g.induced(subset | {y})
            component = next(c for c in irreducible_components(enlarged) if y in c)
            if component != frozenset((x, y)):
                continue
            conjugator = elementary_ribbon(g, x, y).inverse()
            # conjugation by Delta_{x,y} fixes x for even labels, swaps x and y for odd ones
            target = (subset - {x}) | {y} if lab.is_odd else subset
            yield conjugator, frozenset(target)


def conj_generators(g: LabeledGraph, x_set: Iterable[str], depth: int) -> List[Tuple[Word, FrozenSet[str]]]:
    """Ribbon chains of length <= depth with the subset each one conjugates X onto

    A chain reaching a (subset, conjugator length) state already seen is dropped.
    """
    start = g.check_subset(x_set)
    if depth < 0:
        raise InvalidArgument(f"depth must be >= 0, got {depth}")
    results: List[Tuple[Word, FrozenSet[str]]] = [(Word.identity(), start)]
    seen: Set[Tuple[FrozenSet[str], int]] = {(start, 0)}
    frontier = list(results)
    for level in range(1, depth + 1):
        fresh = []
        for conjugator, subset in frontier:
            for step, target in _elementary_steps(g, subset):
                chained = reduce_free(step * conjugator)
                state = (target, len(chained))
                if state in seen:
                    continue
                seen.add(state)
                fresh.append((chained, target))
        fresh.sort(key=lambda item: (len(item[0]), str(item[0]), sorted(item[1])))
        logger.debug("ribbon level generated", level=level, count=len(fresh))
        results.extend(fresh)
        frontier = fresh
    return results


def property_c_precondition(g: LabeledGraph, x_set: Iterable[str], y_set: Iterable[str]) -> bool:
    """Every vertex outside C_{X,Y} and C_{Y,X} has star equal to S"""
    sets = oc_sets(g, x_set, y_set)
    covered = sets.c_xy | sets.c_yx
    return all(g.link_star(v)[1] == g.vertex_set for v in g.vertices if v not in covered)


def amalgam_split(g: LabeledGraph, s: str) -> AmalgamSplit:
    """(st(s), lk(s), S - {s})"""
    if s not in g:
        raise UnknownVertex(s)
    link, star = g.link_star(s)
    return AmalgamSplit(star=star, link=link, rest=g.vertex_set - {s})
