"""
Tests for the parabolic subgroup calculus
"""

import itertools

import pytest

from test_normal_forms import w
from test_words import random_word

from artin_retractions.coxeter_graph import INFINITY, Convention, LabeledGraph
from artin_retractions.errors import (InfiniteLabel, InvalidArgument, LabelTooSmall, NotAdmissible,
                                      NotOddOddFree, UnknownVertex)
from artin_retractions.normal_forms import dihedral_nf, words_equal
from artin_retractions.parabolic import (ParabolicDescriptor, amalgam_split, conj_generators,
                                         elementary_ribbon, extended_retraction, intersect_rewrite,
                                         oc_sets, property_c_precondition, x_perp)
from artin_retractions.retractions import RetractionEngine, ordinary_map
from artin_retractions.words import Word, apply_map, reduce_free

TRIVIAL_INTERSECTIONS = [
    ("abcde", "fg"), ("abde", "fg"), ("acde", "fg"), ("ade", "fg"), ("bcde", "fg"),
    ("bde", "fg"), ("cde", "fg"), ("cde", "afg"), ("cde", "abfg"), ("cde", "bfg"),
]

INTERSECTIONS_IN_AB = [
    ("abcde", "afg"), ("abcde", "bfg"), ("abde", "afg"), ("abde", "bfg"),
    ("acde", "afg"), ("acde", "abfg"), ("acde", "bfg"), ("ade", "afg"),
    ("ade", "abfg"), ("ade", "bfg"), ("bcde", "afg"), ("bcde", "abfg"),
    ("bcde", "bfg"), ("bde", "afg"), ("bde", "abfg"), ("bde", "bfg"),
]


class TestOCSets:
    """O- and C-sets"""

    def test_even_graph(self):
        g = LabeledGraph("abcd", {("a", "b"): 4, ("c", "d"): INFINITY}, Convention.NO_TWO_EDGE)
        sets = oc_sets(g, {"a", "c"}, {"b", "c", "d"})
        assert sets.o_xy == frozenset() and sets.o_yx == frozenset()
        assert sets.c_xy == {"c"} and sets.c_yx == {"c"}

    def test_braid_group(self, i2_3):
        sets = oc_sets(i2_3, {"a"}, {"b"})
        assert sets.o_xy == {"a"} and sets.c_xy == {"a"}
        assert sets.o_yx == {"b"} and sets.c_yx == {"b"}

    def test_unknown_vertex(self, i2_3):
        with pytest.raises(UnknownVertex):
            oc_sets(i2_3, {"z"}, {"a"})

    @pytest.mark.parametrize("x,y", TRIVIAL_INTERSECTIONS + [("de", "fg")])
    def test_trivial_intersections(self, seven_vertices, x, y):
        sets = oc_sets(seven_vertices, set(x), set(y))
        assert sets.c_xy == frozenset() and sets.c_yx == frozenset()

    @pytest.mark.parametrize("x,y", [("abde", "abfg"), ("abcde", "abfg")])
    def test_whole_braid_factor(self, seven_vertices, x, y):
        sets = oc_sets(seven_vertices, set(x), set(y))
        assert sets.c_xy == {"a", "b"} == sets.c_yx
        assert sets.o_xy == frozenset() == sets.o_yx

    @pytest.mark.parametrize("x,y", INTERSECTIONS_IN_AB)
    def test_intersections_inside_braid_factor(self, seven_vertices, x, y):
        sets = oc_sets(seven_vertices, set(x), set(y))
        assert sets.c_xy and sets.c_xy <= {"a", "b"}
        assert sets.c_yx and sets.c_yx <= {"a", "b"}

    def check_bijection(self, g):
        engine = RetractionEngine(g)
        subsets = [frozenset(c) for size in range(len(g) + 1)
                   for c in itertools.combinations(g.vertices, size)]
        for xs, ys in itertools.product(subsets, repeat=2):
            sets = oc_sets(g, xs, ys)
            rho_x = engine.ordinary_map(xs)
            images = [rho_x.image(v) for v in sorted(sets.o_yx)]
            assert sorted(images) == sorted(sets.o_xy), (g, xs, ys)
            assert rho_x.image_of_set(ys) == sets.c_xy

    def test_bijection_between_o_sets(self, admissible_small_graphs):
        for g in admissible_small_graphs:
            if len(g) <= 4:
                self.check_bijection(g)

    @pytest.mark.slow
    def test_bijection_on_five_vertices(self, admissible_small_graphs):
        for g in admissible_small_graphs:
            if len(g) == 5:
                self.check_bijection(g)


class TestIntersectRewrite:
    """Rewriting intersections over C-sets"""

    def test_identity_conjugators(self, tri_224):
        rewrite = intersect_rewrite(tri_224, Word.identity(), Word.identity(), {"a", "b"}, {"b", "c"})
        assert rewrite.x.is_identity and rewrite.y.is_identity
        assert rewrite.left == ParabolicDescriptor(Word.identity(), frozenset("b"))
        assert rewrite.right == ParabolicDescriptor(Word.identity(), frozenset("b"))

    def test_braid_group(self, i2_3):
        rewrite = intersect_rewrite(i2_3, Word.identity(), w("a"), {"a"}, {"b"})
        assert rewrite.x == w("a")
        assert rewrite.y.is_identity
        assert rewrite.left == ParabolicDescriptor(w("a"), frozenset("a"))
        assert rewrite.right == ParabolicDescriptor(w("a"), frozenset("b"))

    def test_trivial_intersection(self, seven_admissible):
        rewrite = intersect_rewrite(seven_admissible, Word.identity(), Word.identity(),
                                    {"d", "e"}, {"f", "g"})
        assert rewrite.left.base == frozenset() and rewrite.right.base == frozenset()

    def test_worked_example_lacks_retractions(self, seven_vertices):
        # triangle c, d, e has labels (2, 3, inf)
        with pytest.raises(NotAdmissible):
            intersect_rewrite(seven_vertices, Word.identity(), Word.identity(), {"d", "e"}, {"f", "g"})

    def test_letters_stay_in_their_subsets(self, seven_admissible, rng):
        for _ in range(100):
            f = random_word(rng, "abcdefg", 6)
            gw = random_word(rng, "abcdefg", 6)
            rewrite = intersect_rewrite(seven_admissible, f, gw, set("abde"), set("bfg"))
            assert rewrite.x.generators() <= set("abde")
            assert rewrite.y.generators() <= set("bfg")
            assert rewrite.left.base == oc_sets(seven_admissible, set("abde"), set("bfg")).c_xy

    def test_preconditions(self):
        odd_path = LabeledGraph("abc", {("a", "b"): 3, ("b", "c"): 3}, Convention.NO_TWO_EDGE)
        with pytest.raises(NotOddOddFree):
            intersect_rewrite(odd_path, Word.identity(), Word.identity(), {"a"}, {"c"})
        not_admissible = LabeledGraph("abc", {("a", "b"): INFINITY, ("b", "c"): 4, ("a", "c"): 3})
        with pytest.raises(NotAdmissible):
            intersect_rewrite(not_admissible, Word.identity(), Word.identity(), {"a"}, {"c"})


class TestExtendedRetraction:
    """Retractions onto conjugated parabolics"""

    def test_identity_conjugator(self, tri_224, rng):
        m = ordinary_map(tri_224, {"a", "c"})
        p = ParabolicDescriptor(Word.identity(), frozenset("ac"))
        for _ in range(100):
            word = random_word(rng, "abc", 8)
            assert extended_retraction(tri_224, p, word) == apply_map(m, word)

    def test_fixes_subgroup_elements(self, seven_admissible, rng):
        for _ in range(100):
            f = random_word(rng, "abcdefg", 5)
            u = random_word(rng, "ef", 5)
            p = ParabolicDescriptor(f, frozenset("ef"))
            element = f * u * f.inverse()
            once = extended_retraction(seven_admissible, p, element)
            assert once == reduce_free(element)
            assert extended_retraction(seven_admissible, p, once) == once

    def test_two_presentations_agree(self, i2_3, rng):
        first = ParabolicDescriptor(w("a"), frozenset("b"))
        second = ParabolicDescriptor(w("B"), frozenset("a"))
        assert dihedral_nf(3, w("a b A")) == dihedral_nf(3, w("B a b"))
        for _ in range(20):
            word = random_word(rng, "ab", 6)
            left = extended_retraction(i2_3, first, word)
            right = extended_retraction(i2_3, second, word)
            assert dihedral_nf(3, left) == dihedral_nf(3, right)

    def test_conjugate_of_same_generator_differs(self, i2_3):
        first = ParabolicDescriptor(w("a"), frozenset("b"))
        same_base = ParabolicDescriptor(w("B"), frozenset("b"))
        left = extended_retraction(i2_3, first, w("a"))
        right = extended_retraction(i2_3, same_base, w("a"))
        assert dihedral_nf(3, left) != dihedral_nf(3, right)

    def test_idempotent_in_group(self, i2_3, rng):
        p = ParabolicDescriptor(w("a b"), frozenset("a"))
        for _ in range(50):
            once = extended_retraction(i2_3, p, random_word(rng, "ab", 6))
            twice = extended_retraction(i2_3, p, once)
            assert words_equal(i2_3, "ab", once, twice) is True

    def test_requires_admissible_graph(self):
        g = LabeledGraph("abc", {("a", "b"): 2, ("b", "c"): 3, ("a", "c"): 4})
        with pytest.raises(NotAdmissible):
            extended_retraction(g, ParabolicDescriptor(Word.identity(), frozenset("a")), w("a"))

    def test_large_fc_graph(self):
        names = [f"v{i:02d}" for i in range(17)]
        g = LabeledGraph(names, {}, Convention.NO_TWO_EDGE)
        p = ParabolicDescriptor(Word.identity(), frozenset({"v00", "v01", "v02"}))
        assert extended_retraction(g, p, Word.of("v00", "v05")) == Word.of("v00")
        rewrite = intersect_rewrite(g, Word.identity(), Word.identity(), {"v00"}, {"v01"})
        assert rewrite.left.base == frozenset() and rewrite.right.base == frozenset()


class TestPerpAndRibbons:
    """X-perp and elementary ribbons"""

    def test_x_perp(self, seven_vertices):
        assert x_perp(seven_vertices, set()) == seven_vertices.vertex_set
        assert x_perp(seven_vertices, seven_vertices.vertices) == frozenset()
        assert x_perp(seven_vertices, {"a", "b"}) == set("cdefg")

    def test_ribbons(self, i2_3, i2_4, tri_224):
        assert elementary_ribbon(i2_3, "a", "b") == w("b a")
        assert elementary_ribbon(i2_4, "a", "b") == w("b a b")
        with pytest.raises(LabelTooSmall):
            elementary_ribbon(tri_224, "a", "b")
        with pytest.raises(InfiniteLabel):
            elementary_ribbon(LabeledGraph("ab", {("a", "b"): INFINITY}), "a", "b")


class TestConjugators:
    """Bounded ribbon chains"""

    def test_depth_zero(self, i2_3):
        assert conj_generators(i2_3, {"b"}, 0) == [(Word.identity(), frozenset("b"))]

    def test_negative_depth(self, i2_3):
        with pytest.raises(InvalidArgument):
            conj_generators(i2_3, {"b"}, -1)

    def test_braid_group_depth_one(self, i2_3):
        chains = conj_generators(i2_3, {"b"}, 1)
        assert (w("B A"), frozenset("a")) in chains
        assert all(target in (frozenset("a"), frozenset("b")) for _, target in chains)

    def test_no_ribbons_without_middle_labels(self):
        g = LabeledGraph("abc", {("a", "b"): INFINITY}, Convention.NO_TWO_EDGE)
        assert conj_generators(g, {"a"}, 3) == [(Word.identity(), frozenset("a"))]

    @pytest.mark.parametrize("m", [3, 4, 5, 6])
    def test_depth_one_chains_conjugate(self, m):
        g = LabeledGraph("ab", {("a", "b"): m})
        for start in ("a", "b"):
            for conjugator, target in conj_generators(g, {start}, 1)[1:]:
                (image,) = target
                conjugated = conjugator * Word.generator(start) * conjugator.inverse()
                assert dihedral_nf(m, conjugated) == dihedral_nf(m, Word.generator(image))

    def test_chains_deduplicated(self, i2_3):
        chains = conj_generators(i2_3, {"a"}, 4)
        assert len(chains) == len(set(chains))

    def test_revisited_state_dropped(self):
        # b and c both lead back to {a} with a conjugator of length 4
        g = LabeledGraph("abc", {("a", "b"): 3, ("a", "c"): 3}, Convention.NO_TWO_EDGE)
        chains = conj_generators(g, {"a"}, 2)
        assert chains[:3] == [(Word.identity(), frozenset("a")),
                              (w("A B"), frozenset("b")), (w("A C"), frozenset("c"))]
        back = [(conjugator, target) for conjugator, target in chains if len(conjugator) == 4]
        assert back == [(w("B A A B"), frozenset("a"))]
        states = [(target, len(conjugator)) for conjugator, target in chains]
        assert len(states) == len(set(states))


class TestSplittings:
    """Property C precondition and amalgam data"""

    def test_property_c(self, seven_vertices):
        assert property_c_precondition(seven_vertices, seven_vertices.vertices, seven_vertices.vertices)
        assert not property_c_precondition(seven_vertices, {"d", "e"}, {"f", "g"})
        commuting = LabeledGraph("abcd", {}, Convention.NO_TWO_EDGE)
        assert property_c_precondition(commuting, {"a"}, {"b"})

    def test_amalgam(self, seven_vertices):
        split = amalgam_split(seven_vertices, "g")
        assert split.star == set("abcdg")
        assert split.link == set("abcd")
        assert split.rest == seven_vertices.vertex_set - {"g"}
        assert split.link == split.star & split.rest

    def test_amalgam_extremes(self):
        complete = LabeledGraph("abc", {}, Convention.NO_TWO_EDGE)
        assert amalgam_split(complete, "a").star == complete.vertex_set
        free = LabeledGraph("abc", {}, Convention.NO_INFINITY_EDGE)
        split = amalgam_split(free, "a")
        assert split.star == {"a"} and split.link == frozenset()
        with pytest.raises(UnknownVertex):
            amalgam_split(free, "z")
