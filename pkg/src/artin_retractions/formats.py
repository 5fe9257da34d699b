"""
Text formats for graphs, words and generator subsets

Graph files are line oriented:

    # comment
    convention no-inf | no-2 | full
    vertex <name>
    edge <u> <v> <label | inf>
"""

import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .coxeter_graph import INFINITY, TWO, Convention, Label, LabeledGraph
from .errors import DuplicateEdge, ParseError, UnknownGenerator, UnknownVertex
from .words import Word

_TERM = re.compile(r"[^\s*]+")
_POWER = re.compile(r"^(?P<name>[^\^]+)(?:\^(?P<power>[+-]?\d+))?$")


@dataclass
class EdgeDeclaration:
    u: str
    v: str
    label: Label
    line: int


@dataclass
class GraphDocument:
    """Parsed graph file before label materialization"""
    convention: Convention
    vertices: List[str] = field(default_factory=list)
    edges: List[EdgeDeclaration] = field(default_factory=list)

    def to_graph(self) -> LabeledGraph:
        labels = {(edge.u, edge.v): edge.label for edge in self.edges}
        return LabeledGraph(self.vertices, labels, self.convention)


def _strip_comment(raw: str) -> str:
    return raw.split("#", 1)[0]


def _column(raw: str, token: str, start: int = 0) -> int:
    return raw.find(token, start) + 1


def parse_document(text: str) -> GraphDocument:
    """Parse graph text into declarations, checking names and duplicates"""
    document: Optional[GraphDocument] = None
    declared: set = set()
    seen_pairs: Dict[FrozenSet[str], int] = {}

    for number, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        tokens = body.split()
        if not tokens:
            continue
        keyword = tokens[0]

        if keyword == "convention":
            if document is not None:
                raise ParseError("convention declared twice", number, 1)
            if len(tokens) != 2:
                raise ParseError("expected 'convention no-inf|no-2|full'", number, 1)
            try:
                document = GraphDocument(Convention(tokens[1]))
            except ValueError:
                raise ParseError(f"unknown convention '{tokens[1]}'", number,
                                 _column(raw, tokens[1], len("convention")))
            continue

        if document is None:
            raise ParseError("missing convention declaration before first statement", number, 1)

        if keyword == "vertex":
            if len(tokens) != 2:
                raise ParseError("expected 'vertex <name>'", number, 1)
            name = tokens[1]
            if not name.isidentifier():
                raise ParseError(f"invalid vertex name '{name}'", number, _column(raw, name, 6))
            if name in declared:
                raise ParseError(f"vertex '{name}' declared twice", number, _column(raw, name, 6))
            declared.add(name)
            document.vertices.append(name)
        elif keyword == "edge":
            if len(tokens) != 4:
                raise ParseError("expected 'edge <u> <v> <label>'", number, 1)
            _, u, v, label_text = tokens
            if u == v:
                raise ParseError(f"self-pair '{u} {v}' has no label", number,
                                 _column(raw, v, _column(raw, u, 4)))
            for name in (u, v):
                if name not in declared:
                    raise UnknownVertex(name)
            label = Label.parse(label_text)
            key = frozenset((u, v))
            if key in seen_pairs:
                raise DuplicateEdge(u, v, number)
            seen_pairs[key] = number
            document.edges.append(EdgeDeclaration(u, v, label, number))
        else:
            raise ParseError(f"unknown statement '{keyword}'", number, _column(raw, keyword))

    if document is None:
        raise ParseError("missing convention declaration", 1, 1)
    return document


def parse_graph(text: str) -> LabeledGraph:
    """Graph text to a LabeledGraph with every pair labelled"""
    return parse_document(text).to_graph()


def format_graph(g: LabeledGraph, convention: Convention = Convention.FULL_EDGE) -> str:
    """Print a graph; pairs implied by the convention are omitted"""
    lines = [f"convention {convention.value}"]
    lines.extend(f"vertex {v}" for v in g.vertices)
    for u, v, lab in g.pairs():
        if convention is Convention.NO_INFINITY_EDGE and lab == INFINITY:
            continue
        if convention is Convention.NO_TWO_EDGE and lab == TWO:
            continue
        lines.append(f"edge {u} {v} {lab}")
    return "\n".join(lines) + "\n"


def to_dot(g: LabeledGraph) -> str:
    """Graphviz rendering in the no-2 convention; infinite labels are dashed"""
    lines = ["graph coxeter {"]
    lines.extend(f'  "{v}";' for v in g.vertices)
    for u, v, lab in g.pairs():
        if lab == TWO:
            continue
        style = ', style=dashed' if lab.is_infinite else ''
        shown = "∞" if lab.is_infinite else str(lab)
        lines.append(f'  "{u}" -- "{v}" [label="{shown}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_word(text: str, generators: Iterable[str]) -> Word:
    """'1', or terms name / name^k separated by '*' or whitespace"""
    allowed = set(generators)
    stripped = text.strip()
    if stripped == "1":
        return Word.identity()
    if not stripped:
        raise ParseError("empty word; write '1' for the identity", 1, 1)
    letters: List[Tuple[str, int]] = []
    for match in _TERM.finditer(text):
        term = match.group(0)
        column = match.start() + 1
        parsed = _POWER.match(term)
        if parsed is None or not parsed.group("name").isidentifier():
            raise ParseError(f"malformed term '{term}'", 1, column)
        name = parsed.group("name")
        if name not in allowed:
            raise UnknownGenerator(name)
        power = int(parsed.group("power")) if parsed.group("power") is not None else 1
        letters.append((name, power))
    return Word.of(*letters)


def parse_subset(text: str, g: LabeledGraph) -> FrozenSet[str]:
    """Comma or whitespace separated vertex names; '', '-' or '{}' is the empty set"""
    cleaned = text.strip().strip("{}").strip()
    if cleaned in ("", "-"):
        return frozenset()
    names = [name for name in re.split(r"[,\s]+", cleaned) if name]
    for name in names:
        if name not in g:
            raise UnknownVertex(name)
    return frozenset(names)
