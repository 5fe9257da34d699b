"""
Shared fixtures: example graphs, seeded generators and golden files
"""

import itertools
import os
import random
import sys
from pathlib import Path

import networkx as nx
import pytest

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from artin_retractions.coxeter_graph import (INFINITY, Convention, LabeledGraph, is_odd_odd_free,
                                             triangle_graph)
from artin_retractions.finite_type import is_fc_type
from artin_retractions.retractions import admits_retractions_fc, classify_triangle

DATA_DIR = Path(__file__).parent / 'data'
SAMPLES = int(os.environ.get('ARTIN_TEST_SAMPLES') or 10000)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive enumerations on five vertices and full random samples")


def vertex_names(n):
    return [chr(ord('a') + i) for i in range(n)]


def all_graphs(n, labels):
    """Every labelling of the complete graph on n named vertices"""
    names = vertex_names(n)
    pairs = list(itertools.combinations(names, 2))
    for choice in itertools.product(labels, repeat=len(pairs)):
        yield LabeledGraph(names, dict(zip(pairs, choice)))


def random_graph(rng, n, labels):
    names = vertex_names(n)
    return LabeledGraph(names, {pair: rng.choice(labels)
                                for pair in itertools.combinations(names, 2)})


def random_admissible_graph(rng, n, labels):
    """
    Grow a graph one vertex at a time, keeping every triangle in an allowed
    family. Allowed triangles are spherical or contain an infinite label, so
    the result is of FC type and admits retractions.
    """
    names = vertex_names(n)
    chosen = {}
    for k, v in enumerate(names):
        for _ in range(200):
            attempt = {(u, v): rng.choice(labels) for u in names[:k]}
            merged = {**chosen, **attempt}
            if all(classify_triangle((merged[(x, y)], merged[(y, v)], merged[(x, v)])) is None
                   for x, y in itertools.combinations(names[:k], 2)):
                chosen = merged
                break
        else:
            chosen.update({(u, v): INFINITY for u in names[:k]})
    return LabeledGraph(names, chosen)


def _same_label(first, second):
    return first["label"] == second["label"]


def admissible_graphs_up_to_iso(max_n, labels):
    """
    One graph per isomorphism class of labellings on 1..max_n vertices whose
    triangles all lie in an allowed family. Classes on n vertices are grown
    from the classes on n - 1 vertices, since induced subgraphs stay allowed.
    """
    layer = [LabeledGraph(["a"], {})]
    found = list(layer)
    for n in range(2, max_n + 1):
        names = vertex_names(n)
        old_names, new = names[:-1], names[-1]
        buckets = {}
        grown = []
        for base in layer:
            old = {pair: base.label(*pair) for pair in itertools.combinations(old_names, 2)}
            for choice in itertools.product(labels, repeat=n - 1):
                attempt = {(u, new): lab for u, lab in zip(old_names, choice)}
                if any(classify_triangle((old[(x, y)], attempt[(x, new)], attempt[(y, new)])) is not None
                       for x, y in itertools.combinations(old_names, 2)):
                    continue
                g = LabeledGraph(names, {**old, **attempt})
                view = g.to_networkx(lambda lab: True)
                bucket = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(view, edge_attr="label"), [])
                if any(nx.is_isomorphic(view, other, edge_match=_same_label) for other in bucket):
                    continue
                bucket.append(view)
                grown.append(g)
        layer = grown
        found.extend(grown)
    return found


@pytest.fixture
def rng():
    """Seeded generator; reruns see the same samples"""
    return random.Random(20240917)


@pytest.fixture
def i2_3():
    return LabeledGraph(['a', 'b'], {('a', 'b'): 3})


@pytest.fixture
def i2_4():
    return LabeledGraph(['a', 'b'], {('a', 'b'): 4})


@pytest.fixture
def tri_224():
    return triangle_graph(2, 2, 4)


@pytest.fixture
def square_3():
    """Commuting square a-b-c-d, diagonals b-d labelled 3 and a-c infinite"""
    return LabeledGraph('abcd', {('b', 'd'): 3, ('a', 'c'): 'inf'}, Convention.NO_TWO_EDGE)


@pytest.fixture
def seven_vertices():
    """Type A2 on {a, b} beside the component c-d-e-f-g"""
    return LabeledGraph('abcdefg', {
        ('a', 'b'): 3,
        ('c', 'd'): 3,
        ('d', 'e'): INFINITY,
        ('e', 'f'): 4,
        ('e', 'g'): INFINITY,
        ('f', 'g'): INFINITY,
    }, Convention.NO_TWO_EDGE)


@pytest.fixture
def graph_file():
    def locate(name):
        return str(DATA_DIR / name)
    return locate


@pytest.fixture(scope="session")
def admissible_small_graphs():
    """(odd,odd)-free graphs on at most 5 vertices, labels {2,3,4,inf}, admitting retractions

    One graph per isomorphism class.
    """
    return [g for g in admissible_graphs_up_to_iso(5, [2, 3, 4, INFINITY])
            if is_odd_odd_free(g) and is_fc_type(g) and admits_retractions_fc(g).admits]


@pytest.fixture
def seven_admissible():
    """The same shape with c-d labelled 4, which admits retractions"""
    return LabeledGraph('abcdefg', {
        ('a', 'b'): 3,
        ('c', 'd'): 4,
        ('d', 'e'): INFINITY,
        ('e', 'f'): 4,
        ('e', 'g'): INFINITY,
        ('f', 'g'): INFINITY,
    }, Convention.NO_TWO_EDGE)
