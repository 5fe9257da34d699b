"""
Tests for the coherence deciders
"""

import itertools

import networkx as nx
import pytest

from conftest import SAMPLES, all_graphs, random_admissible_graph, vertex_names

from artin_retractions.coherence import (FailureKind, Method, coherence_fc, coherence_general,
                                         droms_raag)
from artin_retractions.coxeter_graph import INFINITY, Convention, LabeledGraph, triangle_graph
from artin_retractions.errors import NotInScope, NotRAAG


@pytest.fixture
def b2_times_b2():
    return LabeledGraph("abcd", {("a", "b"): 4, ("c", "d"): 4}, Convention.NO_TWO_EDGE)


class TestGeneralCriterion:
    """Chordality, complete subgraphs and forbidden squares"""

    def test_forbidden_square(self, square_3):
        report = coherence_general(square_3)
        assert not report.coherent
        assert report.via is Method.GENERAL_LEMMA
        assert report.failed_condition.kind is FailureKind.FORBIDDEN_SQUARE
        assert report.failed_condition.subset == ("a", "b", "c", "d")

    def test_even_square_diagonal(self):
        g = LabeledGraph("abcd", {("b", "d"): 4, ("a", "c"): INFINITY}, Convention.NO_TWO_EDGE)
        assert coherence_general(g).failed_condition.kind is FailureKind.FORBIDDEN_SQUARE

    def test_bad_complete_subgraph(self, b2_times_b2):
        report = coherence_general(b2_times_b2)
        assert not report.coherent
        assert report.failed_condition.kind is FailureKind.BAD_COMPLETE_SUBGRAPH
        assert report.failed_condition.subset == ("a", "b", "c", "d")
        triangle = coherence_general(triangle_graph(3, 3, 2))
        assert triangle.failed_condition.subset == ("a", "b", "c")

    def test_not_chordal(self):
        cycle = LabeledGraph("abcd", {("a", "c"): INFINITY, ("b", "d"): INFINITY}, Convention.NO_TWO_EDGE)
        report = coherence_general(cycle)
        assert report.failed_condition.kind is FailureKind.NOT_CHORDAL
        assert report.failed_condition.detail == "graph"

    def test_coherent_examples(self):
        assert coherence_general(LabeledGraph("ab", {("a", "b"): INFINITY})).coherent
        assert coherence_general(LabeledGraph("abcd", {}, Convention.NO_TWO_EDGE)).coherent
        assert coherence_general(LabeledGraph([])).coherent
        report = coherence_general(triangle_graph(2, 2, 7))
        assert report.coherent and report.failed_condition is None


class TestFCTheorem:
    """Chordality of the graph and of its label-2 part"""

    def test_square(self, square_3):
        report = coherence_fc(square_3)
        assert not report.coherent
        assert report.via is Method.FC_THEOREM
        assert report.failed_condition.kind is FailureKind.NOT_CHORDAL
        assert report.failed_condition.detail == "label-2 subgraph"

    def test_product_of_dihedrals(self, b2_times_b2):
        report = coherence_fc(b2_times_b2)
        assert not report.coherent
        assert report.failed_condition.detail == "label-2 subgraph"

    def test_coherent_examples(self, tri_224, i2_3):
        assert coherence_fc(tri_224).coherent
        assert coherence_fc(i2_3).coherent
        assert coherence_fc(LabeledGraph("abc", {}, Convention.NO_INFINITY_EDGE)).coherent

    def test_out_of_scope(self):
        with pytest.raises(NotInScope):
            coherence_fc(triangle_graph(4, 3, 4))
        with pytest.raises(NotInScope):
            coherence_fc(triangle_graph(2, 3, 4))

    def test_agrees_with_general_criterion(self, admissible_small_graphs):
        for g in admissible_small_graphs:
            assert coherence_fc(g).coherent == coherence_general(g).coherent, g

    def test_agrees_on_random_graphs(self, rng):
        for _ in range(SAMPLES // 100):
            g = random_admissible_graph(rng, rng.randint(6, 7), [2, 2, 2, 3, 4, 6, INFINITY])
            assert coherence_fc(g).coherent == coherence_general(g).coherent, g

    @pytest.mark.slow
    def test_agrees_on_full_random_sample(self, rng):
        for _ in range(SAMPLES):
            g = random_admissible_graph(rng, rng.randint(6, 7), [2, 2, 2, 3, 4, 6, INFINITY])
            assert coherence_fc(g).coherent == coherence_general(g).coherent, g


class TestRightAngled:
    """Right-angled graphs"""

    def test_examples(self):
        assert droms_raag(LabeledGraph("abc", {}, Convention.NO_TWO_EDGE))
        square = LabeledGraph("abcd", {("a", "c"): INFINITY, ("b", "d"): INFINITY}, Convention.NO_TWO_EDGE)
        assert not droms_raag(square)
        assert droms_raag(LabeledGraph([]))

    def test_rejects_other_labels(self, i2_3):
        with pytest.raises(NotRAAG) as excinfo:
            droms_raag(i2_3)
        assert excinfo.value.pair == ("a", "b")

    def test_matches_general_criterion(self):
        for n in (3, 4):
            for g in all_graphs(n, [2, INFINITY]):
                assert droms_raag(g) == coherence_general(g).coherent

    def test_every_graph_up_to_seven_vertices(self):
        atlas = [shape for shape in nx.graph_atlas_g() if shape.number_of_nodes() > 0]
        assert len(atlas) == 1252
        for shape in atlas:
            names = vertex_names(shape.number_of_nodes())
            labels = {(names[u], names[v]): (2 if shape.has_edge(u, v) else INFINITY)
                      for u, v in itertools.combinations(shape.nodes, 2)}
            g = LabeledGraph(names, labels)
            assert droms_raag(g) == coherence_general(g).coherent == nx.is_chordal(shape), labels
