import random

import pytest
from networkx.algorithms.isomorphism import DiGraphMatcher, categorical_edge_match, categorical_node_match

from src.encoders.extended_encoders import encode_set_of_sets, group_as_set_of_lists, orbital_graphs
from src.encoders.factory import Query, conjugation_predicate, encode_source, refiner_for
from src.encoders.graph_encoders import encode_perm_conj
from src.errors import DegreeMismatch
from src.models import QueryVerb, SourceKind, StackKind
from src.objects.digraphs import LabelledDigraph
from src.objects.stacks import Stack
from src.oracle.brute import brute_filter, brute_transporter, symmetric_group
from src.perms.actions import act
from src.perms.groups import enumerate_group, small_generating_set
from src.refiners.checks import check_perfect
from src.refiners.sampling import random_labelled_digraph, random_permutation, random_source, random_stack
from src.search.benchmark import load_queries, run_benchmark
from src.search.engine import solve, solve_extended
from src.search.groups import (
    centraliser,
    conjugacy_transporter,
    is_two_closed,
    normaliser,
    normaliser_overgroup,
    two_closure,
)
from src.search.intersection import intersect
from src.search.queries import solve_query
from src.search.state import SearchState, colour_refine

PERFECT_KINDS = [k for k in SourceKind if k != SourceKind.GROUP]


def _stab(kind, n, x):
    return solve_query(Query(QueryVerb.STABILISER, kind, n, x))


class TestColourRefine:
    def test_cycle_type_classes(self, perm):
        d = encode_perm_conj(perm("(1 2)(3 6 5)", 6))
        state = colour_refine(SearchState.from_digraph_stacks([d], [d], range(1, 7)))
        assert not state.dead
        assert set(state.cells("left")) == {frozenset({4}), frozenset({1, 2}), frozenset({3, 5, 6})}

    def test_arcless_stack_is_unchanged(self):
        d = LabelledDigraph.uniform(range(1, 5), [], "x")
        state = colour_refine(SearchState.from_digraph_stacks([d], [d], range(1, 5)))
        assert state.cells("left") == [frozenset({1, 2, 3, 4})]

    def test_loop_counts_differ(self):
        two = LabelledDigraph.uniform(range(1, 5), [(1, 1), (2, 2)], "x")
        three = LabelledDigraph.uniform(range(1, 5), [(1, 1), (2, 2), (3, 3)], "x")
        assert colour_refine(SearchState.from_digraph_stacks([two], [three], range(1, 5))).dead

    def test_transporters_respect_refined_colours(self, rng):
        for _ in range(10):
            s = random_labelled_digraph(4, rng)
            t = act(random_permutation(4, rng), s)
            state = colour_refine(SearchState.from_digraph_stacks([s], [t], range(1, 5)))
            for x in brute_transporter(s, t, 4, explicit=True):
                assert all(state.left_colours[v] == state.right_colours[x.image(v)] for v in range(1, 5))


class TestSolve:
    def test_empty_stacks(self):
        empty = Stack.empty(StackKind.DIGRAPH, 4)
        assert solve(empty, empty).order() == 24

    def test_disjoint_sets(self):
        family = frozenset({frozenset({1, 4}), frozenset({2, 3})})
        s = encode_source(SourceKind.DISJOINT_SETS, family, 4)
        result = solve(s, s)
        assert result.order() == 8
        assert result.coset.element_set() == set(brute_transporter(family, family, 4, explicit=True))

    def test_conjugating_transpositions(self, perm):
        a, b = perm("(1 2)", 3), perm("(1 3)", 3)
        result = solve(encode_source(SourceKind.PERM_CONJ, a, 3), encode_source(SourceKind.PERM_CONJ, b, 3))
        assert not result.empty
        assert all(act(g, a) == b for g in result.coset.elements())

    def test_unequal_lengths(self):
        s = Stack(StackKind.POINT, 3, [1])
        assert solve(s, Stack.empty(StackKind.POINT, 3)).empty

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            solve(Stack.empty(StackKind.POINT, 3), Stack.empty(StackKind.POINT, 4))

    def test_automorphisms_match_networkx(self, rng):
        node_match = categorical_node_match("label", None)
        edge_match = categorical_edge_match("label", None)
        for _ in range(8):
            d = random_labelled_digraph(5, rng)
            g = d.to_networkx()
            count = sum(1 for _ in DiGraphMatcher(g, g, node_match=node_match, edge_match=edge_match).isomorphisms_iter())
            stack = Stack(StackKind.DIGRAPH, 5, [d])
            assert solve(stack, stack).order() == count


class TestSolveExtended:
    def test_two_disjoint_pairs(self, gens):
        s = encode_source(SourceKind.SET_OF_SETS, {frozenset({1, 4}), frozenset({2, 3})}, 4)
        result = solve_extended(s, s)
        expected = set(enumerate_group(gens(4, "(1 4)", "(1 2)(3 4)")))
        assert result.coset.element_set() == expected
        assert result.order() == 8
        family = frozenset({frozenset({1, 4}), frozenset({2, 3})})
        assert expected == set(brute_transporter(family, family, 4, explicit=True))

    def test_empty_stacks(self):
        empty = Stack.empty(StackKind.EXTENDED, 3)
        assert solve_extended(empty, empty).order() == 6

    def test_extra_counts_differ(self):
        s = Stack(StackKind.EXTENDED, 3, [encode_set_of_sets([{1}, {2}], 3)])
        t = Stack(StackKind.EXTENDED, 3, [encode_set_of_sets([{1}, {2}, {3}], 3)])
        assert solve_extended(s, t).empty

    def test_agrees_with_oracle(self, rng):
        for k in range(12):
            n = 3 + k % 2
            s = random_stack(StackKind.EXTENDED, n, rng, max_length=2)
            t = act(random_permutation(n, rng), s) if k % 3 else random_stack(StackKind.EXTENDED, n, rng, length=len(s))
            expected = set(brute_transporter(s, t, n, explicit=True))
            assert solve_extended(s, t).coset.element_set() == expected


class TestTwoClosure:
    def test_cyclic_group_is_two_closed(self, gens):
        c4 = gens(4, "(1 2 3 4)")
        assert is_two_closed(c4)
        assert two_closure(c4).element_set() == set(enumerate_group(c4))

    def test_alternating_group_closes_to_symmetric(self, gens):
        a4 = gens(4, "(1 2 3)", "(2 3 4)")
        assert not is_two_closed(a4)
        closure = two_closure(a4)
        assert closure.order() == 24
        assert two_closure(closure.generators, 4).order() == 24

    def test_symmetric_group(self, gens):
        assert two_closure(gens(4, "(1 2)", "(1 2 3 4)")).order() == 24

    def test_two_transitive_group_on_six_points(self, a5_on_six):
        orbital = next(d for d in orbital_graphs(a5_on_six, 6) if (1, 2) in d.arcs)
        assert len(orbital.arcs) == 30
        assert not is_two_closed(a5_on_six)
        assert two_closure(a5_on_six).order() == 720

    def test_orbit_of_triple_pins_the_group(self, a5_on_six):
        group = enumerate_group(a5_on_six)
        orbit = frozenset(act(h, frozenset({1, 2, 3})) for h in group)
        assert _stab(SourceKind.SET_OF_SETS, 6, orbit).coset.element_set() == set(group)


class TestNormaliser:
    def test_block_group(self, block_group):
        found = normaliser(block_group, 6)
        assert found.exact
        elements = found.coset.element_set()
        assert elements == normaliser_overgroup(block_group, 6).element_set()
        assert elements == set(brute_filter(conjugation_predicate(block_group, block_group, 6), 6))
        assert 12 < len(elements) < 720

    @pytest.mark.parametrize(
        "n,texts",
        [(4, ["(1 2 3 4)"]), (4, ["(1 2 3)", "(2 3 4)"]), (4, ["(1 2)"]), (5, ["(1 2)(3 4)"])],
    )
    def test_overgroup_normalises_two_closure(self, gens, n, texts):
        group = gens(n, *texts)
        closure = two_closure(group, n).generators
        expected = set(brute_filter(conjugation_predicate(closure, closure, n), n))
        assert normaliser_overgroup(group, n).element_set() == expected

    def test_overgroup_contains_the_normaliser(self):
        rng = random.Random("normaliser-overgroup")
        for i in range(8):
            n = 4 + i % 2
            group = tuple(random_permutation(n, rng) for _ in range(1 + i % 2))
            exact = set(brute_filter(conjugation_predicate(group, group, n), n))
            assert exact <= normaliser_overgroup(group, n).element_set()
            assert normaliser(group, n).coset.element_set() == exact

    def test_trivial_and_symmetric_groups(self, gens):
        assert normaliser([], 4).coset.order() == 24
        assert normaliser(gens(4, "(1 2)", "(1 2 3 4)")).coset.order() == 24

    def test_cap_makes_result_inexact(self, gens):
        found = normaliser(gens(4, "(1 2 3 4)"), cap=2)
        assert not found.exact
        assert found.coset.order() == 8


class TestConjugacy:
    def test_transpositions(self, gens, perm):
        found = conjugacy_transporter(gens(4, "(1 2)"), gens(4, "(3 4)"))
        assert not found.empty
        assert found.coset.order() == 4
        assert all(act(x, perm("(1 2)", 4)) == perm("(3 4)", 4) for x in found.coset.elements())

    def test_different_orders(self, gens):
        assert conjugacy_transporter(gens(4, "(1 2 3 4)"), gens(4, "(1 2)(3 4)", "(1 3)(2 4)")).empty

    def test_self_conjugacy_is_the_normaliser(self, block_group):
        assert conjugacy_transporter(block_group, block_group).coset.element_set() == normaliser(block_group).coset.element_set()

    def test_centraliser(self, gens, perm):
        x = perm("(1 2)(3 4)", 4)
        expected = set(brute_filter(lambda g: act(g, x) == x, 4))
        assert centraliser(gens(4, "(1 2)(3 4)")).element_set() == expected
        assert len(expected) == 8


class TestSubgroupsOfS4:
    def test_set_of_lists_pins_every_subgroup(self):
        s4 = symmetric_group(4)
        subgroups = {frozenset(enumerate_group([a, b])) for a in s4 for b in s4}
        assert len(subgroups) == 30
        for subgroup in subgroups:
            generators = small_generating_set(subgroup, 4)
            lists = group_as_set_of_lists(generators, 4)
            assert _stab(SourceKind.SET_OF_LISTS, 4, lists).coset.element_set() == set(subgroup)


class TestPerfectKinds:
    @pytest.mark.parametrize("kind", PERFECT_KINDS, ids=lambda k: k.value)
    def test_solve_matches_oracle(self, kind):
        rng = random.Random(f"sweep-{kind.value}")
        for i in range(25):
            n = 3 + i % 4
            x = random_source(kind, n, rng)
            y = act(random_permutation(n, rng), x) if i % 2 == 0 else random_source(kind, n, rng)
            q = Query(QueryVerb.TRANSPORTER, kind, n, x, y)
            assert refiner_for(q).perfect or kind == SourceKind.DISJOINT_SETS
            expected = set(brute_transporter(x, y, n, explicit=True))
            assert solve_query(q).coset.element_set() == expected, f"{kind.value} instance {i}"

    @pytest.mark.parametrize("kind", PERFECT_KINDS, ids=lambda k: k.value)
    def test_refiner_is_perfect(self, kind):
        rng = random.Random(f"perfect-{kind.value}")
        for i in range(25):
            n = 3 + i % 4
            x = random_source(kind, n, rng)
            y = act(random_permutation(n, rng), x) if i % 2 == 0 else random_source(kind, n, rng)
            r = refiner_for(Query(QueryVerb.TRANSPORTER, kind, n, x, y))
            assert r.perfect, f"{kind.value} instance {i}"
            report = check_perfect(r, samples=3, seed=i)
            assert report.passed, f"{kind.value} instance {i} on {n} points: {report.lines()}"


class TestIntersection:
    def _refiner(self, kind, n, x):
        return refiner_for(Query(QueryVerb.STABILISER, kind, n, x))

    def test_perfect_refiners_close_at_the_root(self):
        refiners = [self._refiner(SourceKind.SUBSET, 5, frozenset({1, 2})), self._refiner(SourceKind.POINT, 5, 5)]
        result = intersect(refiners, 5)
        assert result.tree_nodes == 1
        assert result.order() == 4

    def test_imperfect_refiner_is_searched(self):
        family = frozenset({frozenset({1, 2}), frozenset({2, 3})})
        r = self._refiner(SourceKind.DISJOINT_SETS, 4, family)
        assert not r.perfect
        refined, plain = intersect([r], 4), intersect([r], 4, apply_refiners=False)
        expected = set(brute_transporter(family, family, 4, explicit=True))
        assert refined.coset.element_set() == expected == plain.coset.element_set()
        assert refined.tree_nodes <= plain.tree_nodes

    def test_refiner_applications_are_counted(self):
        family = frozenset({frozenset({1, 2}), frozenset({2, 3})})
        refiners = [self._refiner(SourceKind.DISJOINT_SETS, 4, family), self._refiner(SourceKind.POINT, 4, 4)]
        assert intersect(refiners, 4).refiner_applications == 2
        assert intersect(refiners, 4, apply_refiners=False).refiner_applications == 0
        assert intersect(refiners[1:], 4).refiner_applications == 1

    def test_degrees_must_agree(self):
        with pytest.raises(DegreeMismatch):
            intersect([self._refiner(SourceKind.POINT, 4, 1)], 5)

    def test_benchmark(self, benchmark_file):
        rows = {row.name: row for row in run_benchmark(str(benchmark_file))}
        assert len(rows) == 10
        assert all(row.monotone for row in rows.values())
        assert all(row.refined_nodes == 1 for row in rows.values() if row.perfect)
        assert rows["subset-stabiliser"].order == 12
        assert rows["normaliser-of-cycle"].order == 8
        assert not rows["normaliser-of-cycle"].perfect
        queries = {q.name: q for q in load_queries(str(benchmark_file))}
        assert all(row.refiner_applications == len(queries[name].refiners) for name, row in rows.items())


class TestQueryExactness:
    def test_overlapping_family_is_filtered(self):
        family = frozenset({frozenset({1, 2, 3}), frozenset({1, 2})})
        q = Query(QueryVerb.STABILISER, SourceKind.DISJOINT_SETS, 4, family)
        assert not refiner_for(q).perfect
        result = solve_query(q)
        assert result.exact
        assert result.coset.element_set() == set(brute_transporter(family, family, 4, explicit=True))
        assert result.order() == 2

    def test_overlapping_transporter(self):
        source = frozenset({frozenset({1, 2, 3}), frozenset({1, 2})})
        target = frozenset({frozenset({2, 3, 4}), frozenset({3, 4})})
        result = solve_query(Query(QueryVerb.TRANSPORTER, SourceKind.DISJOINT_SETS, 4, source, target))
        assert result.coset.element_set() == set(brute_transporter(source, target, 4, explicit=True))

    def test_group_stabiliser_is_the_normaliser(self, a5_on_six):
        result = _stab(SourceKind.GROUP, 6, a5_on_six)
        assert result.exact
        expected = set(brute_filter(conjugation_predicate(a5_on_six, a5_on_six, 6), 6))
        assert result.coset.element_set() == expected
        assert len(expected) == 120

    def test_cap_makes_result_inexact(self, a5_on_six):
        result = solve_query(Query(QueryVerb.STABILISER, SourceKind.GROUP, 6, a5_on_six), cap=10)
        assert not result.exact
        assert result.coset.order() == 720

    def test_trivial_group_stabiliser(self):
        result = _stab(SourceKind.GROUP, 3, ())
        assert result.exact
        assert result.coset.order() == 6
