import random

import pytest

from src.encoders.extended_encoders import (
    encode_set_of_digraphs,
    encode_set_of_lists,
    encode_set_of_sets,
    encode_set_of_stacks,
    group_as_set_of_lists,
    orbital_graphs,
)
from src.encoders.factory import Query, encode_source, infer_kind, refiner_for
from src.encoders.graph_encoders import encode_disjoint_sets, encode_perm_conj, flatten_stack, graph_to_labelled
from src.encoders.partition_encoders import encode_distinct_sizes, encode_subset
from src.errors import DegreeMismatch, InvariantViolation, KindMismatch, UnsupportedQuery
from src.models import QueryVerb, SourceKind, StackKind
from src.objects.digraphs import Graph, LabelledDigraph
from src.objects.labels import BLACK, WHITE
from src.objects.partitions import OrderedPartition
from src.objects.stacks import Stack
from src.perms.actions import act
from src.perms.permutation import identity, parse_perm
from src.refiners.sampling import random_permutation, random_source
from src.search.queries import solve_query


def _extra_arcs(graph):
    return graph.representative.arcs


class TestPartitionEncoders:
    def test_subset(self):
        assert encode_subset(set(), 4).entries == ()
        assert encode_subset({1, 2, 3, 4}, 4).entries == (OrderedPartition.of({1, 2, 3, 4}),)
        assert encode_subset({1, 2}, 4).entries == (OrderedPartition.of({1, 2}, {3, 4}),)

    def test_subset_out_of_range(self):
        with pytest.raises(InvariantViolation):
            encode_subset({5}, 4)

    def test_distinct_sizes(self):
        members = encode_distinct_sizes([{1, 2, 3}, {4}])
        assert members == (frozenset({4}), frozenset({1, 2, 3}))
        with pytest.raises(InvariantViolation):
            encode_distinct_sizes([{1}, {2}])


class TestGraphEncoders:
    def test_perm_conj(self):
        digraph = encode_perm_conj(parse_perm("(1 2)(3 6 5)", 6))
        assert digraph.arcs == frozenset({(1, 2), (2, 1), (3, 6), (6, 5), (5, 3), (4, 4)})

    def test_perm_conj_identity(self):
        assert encode_perm_conj(identity(3)).arcs == frozenset({(1, 1), (2, 2), (3, 3)})

    def test_perm_conj_cycle(self):
        assert encode_perm_conj(parse_perm("(1 2 3)", 3)).arcs == frozenset({(1, 2), (2, 3), (3, 1)})

    def test_graph_is_symmetrised(self):
        digraph = graph_to_labelled(Graph(3, frozenset({frozenset({1, 3})})))
        assert digraph.arcs == frozenset({(1, 3), (3, 1)})

    def test_disjoint_sets_are_cliques_with_loops(self):
        digraph = encode_disjoint_sets([{1, 2}, {4}], 4)
        assert digraph.arcs == frozenset({(1, 1), (1, 2), (2, 1), (2, 2), (4, 4)})

    def test_flatten_stack_tags_positions(self):
        a = LabelledDigraph.uniform([1, 2], [(1, 2)], "x")
        b = LabelledDigraph.uniform([1, 2], [(2, 1)], "x")
        ab = flatten_stack(Stack(StackKind.DIGRAPH, 2, [a, b]))
        ba = flatten_stack(Stack(StackKind.DIGRAPH, 2, [b, a]))
        assert ab != ba
        assert ab.arcs == frozenset({(1, 2), (2, 1)})


class TestExtendedEncoders:
    def test_set_of_sets(self):
        family = [set(), {1}, {2, 3, 7}, {5, 6, 7}]
        graph = encode_set_of_sets(family, 7)
        assert graph.extra == frozenset({8, 9, 10, 11})
        assert _extra_arcs(graph) == frozenset({(1, 9), (2, 10), (3, 10), (7, 10), (5, 11), (6, 11), (7, 11)})
        labels = graph.representative.vertex_labels
        assert all(labels[v] == WHITE for v in range(1, 8))
        assert all(labels[v] == BLACK for v in range(8, 12))

    def test_empty_set_of_sets(self):
        graph = encode_set_of_sets([], 3)
        assert graph.extra == frozenset()
        assert graph.representative.arcs == frozenset()

    def test_member_order_does_not_matter(self):
        one = encode_set_of_sets([{1, 2}, {3}], 3)
        other = encode_set_of_sets([{3}, {1, 2}], 3)
        assert one == other

    def test_set_of_lists(self):
        graph = encode_set_of_lists([(1, 6), (4, 3), (5, 2, 5), ()], 6)
        assert graph.extra == frozenset(range(7, 15))
        expected = {(7, 1), (8, 6), (7, 8), (9, 4), (10, 3), (9, 10), (11, 5), (12, 2), (13, 5), (11, 12), (12, 13)}
        assert _extra_arcs(graph) == frozenset(expected)

    def test_set_holding_the_empty_list(self):
        graph = encode_set_of_lists([()], 3)
        assert graph.extra == frozenset({4})
        assert graph.representative.arcs == frozenset()

    def test_single_point_list(self):
        graph = encode_set_of_lists([(2,)], 3)
        assert _extra_arcs(graph) == frozenset({(4, 2)})

    def test_set_of_digraphs(self):
        forward = LabelledDigraph.uniform([1, 2, 3], [(1, 2), (2, 3), (3, 1)], "x")
        backward = LabelledDigraph.uniform([1, 2, 3], [(2, 1), (3, 2), (1, 3)], "x")
        graph = encode_set_of_digraphs({forward, backward}, 3)
        rep = graph.representative
        assert rep.vertices == frozenset(range(1, 12))
        assert graph.extra == frozenset(range(4, 12))
        assert {rep.vertex_label(10), rep.vertex_label(11)} == {"anchor"}
        assert len(rep.arcs) == 18
        assert all(rep.arc_label((copy, copy - 3)) == "hash" for copy in (4, 5, 6))
        assert all(rep.arc_label((copy, copy - 6)) == "hash" for copy in (7, 8, 9))

    def test_empty_set_of_digraphs(self):
        graph = encode_set_of_digraphs([], 3)
        assert graph.representative.vertices == frozenset({1, 2, 3})

    def test_reserved_label(self):
        marked = LabelledDigraph.uniform([1, 2], [], "hash")
        with pytest.raises(InvariantViolation):
            encode_set_of_digraphs([marked], 2)

    def test_set_of_stacks(self):
        a = Stack(StackKind.DIGRAPH, 2, [LabelledDigraph.uniform([1, 2], [(1, 2)], "x")])
        b = Stack(StackKind.DIGRAPH, 2, [LabelledDigraph.uniform([1, 2], [(2, 1)], "x")])
        assert encode_set_of_stacks({a, b}, 2) == encode_set_of_stacks({b, a}, 2)

    def test_orbital_graphs_of_block_group(self, block_group):
        orbitals = orbital_graphs(block_group, 6)
        assert len(orbitals) == 4
        matching = next(g for g in orbitals if (1, 4) in g.arcs)
        assert matching.arcs == frozenset({(1, 4), (4, 1), (2, 5), (5, 2), (3, 6), (6, 3)})
        blocks = [{1, 4}, {2, 5}, {3, 6}]
        forward = {(a, b) for i in range(3) for a in blocks[i] for b in blocks[(i + 1) % 3]}
        backward = {(b, a) for a, b in forward}
        assert next(g for g in orbitals if (1, 2) in g.arcs).arcs == frozenset(forward)
        assert next(g for g in orbitals if (2, 1) in g.arcs).arcs == frozenset(backward)

    def test_group_as_set_of_lists(self, gens):
        lists = group_as_set_of_lists(gens(3, "(1 2 3)"), 3)
        assert lists == frozenset({(1, 2, 3), (2, 3, 1), (3, 1, 2)})

    def test_orbital_graphs_of_trivial_group(self):
        assert len(orbital_graphs([], 3)) == 9
        with pytest.raises(DegreeMismatch):
            orbital_graphs([])


class TestFactory:
    def test_infer_kind(self):
        assert infer_kind(3) == SourceKind.POINT
        assert infer_kind(frozenset({1})) == SourceKind.SUBSET
        assert infer_kind(identity(3)) == SourceKind.PERM_CONJ
        with pytest.raises(UnsupportedQuery):
            infer_kind("text")

    def test_encode_source_kinds(self):
        assert encode_source(SourceKind.POINT_LIST, (1, 3), 3).entries == (1, 3)
        assert encode_source(SourceKind.SET_OF_SETS, frozenset(), 3).kind == StackKind.EXTENDED
        with pytest.raises(UnsupportedQuery):
            encode_source(SourceKind.LIST, (), 3)

    def test_transporter_needs_target(self):
        with pytest.raises(KindMismatch):
            refiner_for(Query(QueryVerb.TRANSPORTER, SourceKind.SUBSET, 3, frozenset({1})))

    def test_overlapping_sets_are_not_perfect(self):
        family = frozenset({frozenset({1, 2}), frozenset({2, 3})})
        assert not refiner_for(Query(QueryVerb.STABILISER, SourceKind.DISJOINT_SETS, 4, family)).perfect
        assert refiner_for(Query(QueryVerb.STABILISER, SourceKind.SET_OF_SETS, 4, family)).perfect

    def test_group_refiner_is_not_perfect(self, gens):
        r = refiner_for(Query(QueryVerb.STABILISER, SourceKind.GROUP, 4, gens(4, "(1 2 3 4)")))
        assert not r.perfect
        assert r.kind == StackKind.EXTENDED

    def test_list_items_are_lifted(self):
        q = Query(QueryVerb.STABILISER, SourceKind.LIST, 4, (frozenset({1, 2}), 3))
        r = refiner_for(q)
        assert r.kind == StackKind.PARTITION
        assert solve_query(q).order() == 2

    def test_list_shape_mismatch_is_empty(self):
        q = Query(QueryVerb.TRANSPORTER, SourceKind.LIST, 4, (frozenset({1}), 2), (3, frozenset({4})))
        assert solve_query(q).empty

    def test_distinct_sizes_pairs_members_by_size(self):
        source = frozenset({frozenset({1}), frozenset({2, 3})})
        target = frozenset({frozenset({3, 4}), frozenset({2})})
        result = solve_query(Query(QueryVerb.TRANSPORTER, SourceKind.DISTINCT_SIZES, 4, source, target))
        assert not result.empty
        assert result.coset.representative.image(1) == 2
        mismatch = frozenset({frozenset({1, 2, 3}), frozenset({4})})
        assert solve_query(Query(QueryVerb.TRANSPORTER, SourceKind.DISTINCT_SIZES, 4, source, mismatch)).empty

    def test_empty_subset_against_nonempty(self):
        q = Query(QueryVerb.TRANSPORTER, SourceKind.SUBSET, 4, frozenset(), frozenset({1}))
        assert solve_query(q).empty


SINGLE_STACK_KINDS = [k for k in SourceKind if k not in (SourceKind.LIST, SourceKind.DISTINCT_SIZES)]


class TestEncoderProperties:
    @pytest.mark.parametrize("kind", SINGLE_STACK_KINDS, ids=lambda k: k.value)
    def test_encoding_commutes_with_the_action(self, kind):
        rng = random.Random(f"equivariant-{kind.value}")
        for i in range(10):
            n = 3 + i % 3
            x = random_source(kind, n, rng)
            g = random_permutation(n, rng)
            assert act(g, encode_source(kind, x, n)) == encode_source(kind, act(g, x), n), f"{kind.value} sample {i}"

    @pytest.mark.parametrize(
        "kind",
        [
            SourceKind.SUBSET,
            SourceKind.ORDERED_PARTITION,
            SourceKind.GRAPH,
            SourceKind.PERM_CONJ,
            SourceKind.SET_OF_SETS,
            SourceKind.SET_OF_LISTS,
        ],
        ids=lambda k: k.value,
    )
    def test_distinct_objects_have_distinct_encodings(self, kind):
        rng = random.Random(f"injective-{kind.value}")
        for i in range(20):
            n = 3 + i % 2
            x, y = random_source(kind, n, rng), random_source(kind, n, rng)
            if x != y:
                assert encode_source(kind, x, n) != encode_source(kind, y, n), f"{x} and {y}"

    def test_lists_differing_in_order(self):
        a = encode_set_of_lists({(1, 2), (3,)}, 3)
        b = encode_set_of_lists({(2, 1), (3,)}, 3)
        assert a != b

    def test_conjugation_transports_orbital_graphs(self):
        rng = random.Random("orbitals")
        for i in range(10):
            n = 4 + i % 2
            group = tuple(random_permutation(n, rng) for _ in range(1 + i % 2))
            x = random_permutation(n, rng)
            conjugate = act(x, group)
            assert frozenset(act(x, d) for d in orbital_graphs(group, n)) == frozenset(orbital_graphs(conjugate, n))
            assert act(x, encode_source(SourceKind.GROUP, group, n)) == encode_source(SourceKind.GROUP, conjugate, n)
