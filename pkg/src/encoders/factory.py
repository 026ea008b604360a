"""Refiners for stabiliser and transporter queries on source objects.

Every source kind is encoded into a stack, and the refiner is the constant
pair of encodings. Its target is the source transporter {g : x^g = y}, so
checks compare against the source action and never against the encoding.
"""
import logging
from dataclasses import dataclass, replace
from functools import singledispatch
from typing import Any, Callable, Sequence, Tuple

from .extended_encoders import (
    encode_set_of_digraphs,
    encode_set_of_lists,
    encode_set_of_sets,
    encode_set_of_stacks,
    orbital_graphs,
)
from .graph_encoders import encode_disjoint_sets, encode_perm_conj, graph_to_labelled, is_disjoint_family
from .partition_encoders import encode_distinct_sizes, encode_subset
from ..errors import DegreeMismatch, KindMismatch, UnsupportedQuery
from ..models import QueryVerb, SourceKind, StackKind
from ..objects.digraphs import Digraph, Graph, LabelledDigraph
from ..objects.partitions import OrderedPartition
from ..objects.stacks import Stack
from ..perms.actions import act
from ..perms.groups import enumerate_group
from ..perms.permutation import Permutation
from ..refiners.framework import RefinerPair, constant_refiner, lift_refiner, list_refiner, mismatch_refiner
from ..refiners.targets import TargetSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Query:
    """A stabiliser query (``target`` is None) or a transporter query from ``source`` to ``target``.

    ``item_kinds`` names the kind of each member of a ``list`` source; when
    empty the kinds are inferred from the members' types.
    """

    verb: QueryVerb
    kind: SourceKind
    degree: int
    source: Any
    target: Any = None
    item_kinds: Tuple[SourceKind, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "verb", QueryVerb(self.verb))
        object.__setattr__(self, "kind", SourceKind(self.kind))
        object.__setattr__(self, "item_kinds", tuple(SourceKind(k) for k in self.item_kinds))

    @property
    def image(self) -> Any:
        return self.source if self.verb == QueryVerb.STABILISER or self.target is None else self.target


@singledispatch
def infer_kind(obj: Any) -> SourceKind:
    raise UnsupportedQuery(f"cannot infer the kind of {type(obj).__name__}")


@infer_kind.register
def _(obj: int) -> SourceKind:
    return SourceKind.POINT


@infer_kind.register(frozenset)
@infer_kind.register(set)
def _(obj) -> SourceKind:
    return SourceKind.SUBSET


@infer_kind.register
def _(obj: OrderedPartition) -> SourceKind:
    return SourceKind.ORDERED_PARTITION


@infer_kind.register
def _(obj: Graph) -> SourceKind:
    return SourceKind.GRAPH


@infer_kind.register
def _(obj: Digraph) -> SourceKind:
    return SourceKind.DIGRAPH


@infer_kind.register
def _(obj: LabelledDigraph) -> SourceKind:
    return SourceKind.LABELLED_DIGRAPH


@infer_kind.register
def _(obj: Permutation) -> SourceKind:
    return SourceKind.PERM_CONJ


def _single(kind: StackKind, n: int, entry: Any) -> Stack:
    return Stack(kind, n, [entry])


# Source kinds whose encoding is one stack, independent of the other side.
_ENCODERS: dict = {
    SourceKind.POINT: lambda x, n: _single(StackKind.POINT, n, x),
    SourceKind.POINT_LIST: lambda x, n: Stack(StackKind.POINT, n, tuple(x)),
    SourceKind.SUBSET: lambda x, n: encode_subset(x, n),
    SourceKind.ORDERED_PARTITION: lambda x, n: _single(StackKind.PARTITION, n, x),
    SourceKind.GRAPH: lambda x, n: _single(StackKind.DIGRAPH, n, graph_to_labelled(x, n)),
    SourceKind.DIGRAPH: lambda x, n: _single(StackKind.DIGRAPH, n, graph_to_labelled(x, n)),
    SourceKind.LABELLED_DIGRAPH: lambda x, n: _single(StackKind.DIGRAPH, n, x),
    SourceKind.DISJOINT_SETS: lambda x, n: _single(StackKind.DIGRAPH, n, encode_disjoint_sets(x, n)),
    SourceKind.UNORDERED_PARTITION: lambda x, n: _single(StackKind.DIGRAPH, n, encode_disjoint_sets(x, n)),
    SourceKind.PERM_CONJ: lambda x, n: _single(StackKind.DIGRAPH, n, encode_perm_conj(x)),
    SourceKind.PERM_LIST: lambda x, n: Stack(StackKind.DIGRAPH, n, [encode_perm_conj(g) for g in x]),
    SourceKind.SET_OF_SETS: lambda x, n: _single(StackKind.EXTENDED, n, encode_set_of_sets(x, n)),
    SourceKind.SET_OF_LISTS: lambda x, n: _single(StackKind.EXTENDED, n, encode_set_of_lists(x, n)),
    SourceKind.SET_OF_DIGRAPHS: lambda x, n: _single(StackKind.EXTENDED, n, encode_set_of_digraphs(x, n)),
    SourceKind.SET_OF_STACKS: lambda x, n: _single(StackKind.EXTENDED, n, encode_set_of_stacks(x, n)),
    SourceKind.GROUP: lambda x, n: _single(StackKind.EXTENDED, n, encode_set_of_digraphs(orbital_graphs(x, n), n)),
}


def encode_source(kind: SourceKind, x: Any, n: int) -> Stack:
    """The stack a source object is encoded as"""
    kind = SourceKind(kind)
    if kind not in _ENCODERS:
        raise UnsupportedQuery(f"{kind.value} objects have no single-stack encoding")
    return _ENCODERS[kind](x, n)


def _is_perfect(kind: SourceKind, x: Any, y: Any) -> bool:
    if kind == SourceKind.GROUP:
        return False
    if kind in (SourceKind.DISJOINT_SETS, SourceKind.UNORDERED_PARTITION):
        return is_disjoint_family(x) and is_disjoint_family(y)
    return True


def conjugation_predicate(gens: Sequence[Permutation], other: Sequence[Permutation], n: int) -> Callable[[Permutation], bool]:
    """Membership test for {g : <gens>^g = <other>}"""
    order = len(enumerate_group(gens, degree=n))
    elements = set(enumerate_group(other, degree=n))

    def conjugates(g: Permutation) -> bool:
        return order == len(elements) and all(act(g, h) in elements for h in gens)

    return conjugates


def source_target(q: Query) -> TargetSet:
    """The transporter of the source objects as a predicate target"""
    x, y, n = q.source, q.image, q.degree
    name = f"Iso({q.kind.value})"
    if q.kind == SourceKind.GROUP:
        return TargetSet.from_predicate(n, conjugation_predicate(x, y, n), name)
    return TargetSet.from_predicate(n, lambda g: act(g, x) == y, name)


def _item_kinds(q: Query) -> Tuple[Tuple[SourceKind, ...], Tuple[SourceKind, ...]]:
    left = tuple(q.item_kinds) or tuple(infer_kind(item) for item in q.source)
    right = tuple(q.item_kinds) or tuple(infer_kind(item) for item in q.image)
    return left, right


def _list_refiner(q: Query, target: TargetSet) -> RefinerPair:
    """Concatenated item refiners, lifted to the richest item kind"""
    n = q.degree
    left_kinds, right_kinds = _item_kinds(q)
    if len(q.source) != len(q.image) or left_kinds != right_kinds:
        logger.debug(f"List query with unequal shapes {left_kinds} and {right_kinds}")
        return mismatch_refiner(StackKind.POINT, n, target, "list")
    parts = []
    for kind, x, y in zip(left_kinds, q.source, q.image):
        if kind in (SourceKind.LIST, SourceKind.DISTINCT_SIZES, SourceKind.GROUP):
            raise UnsupportedQuery(f"{kind.value} objects cannot be list members")
        parts.append(
            constant_refiner(encode_source(kind, x, n), encode_source(kind, y, n), target, kind.value, _is_perfect(kind, x, y))
        )
    if not parts:
        nothing = Stack.empty(StackKind.POINT, n)
        return constant_refiner(nothing, nothing, target, "list", perfect=True)
    richest = max((p.kind for p in parts), key=lambda k: k.rank)
    combined = list_refiner([lift_refiner(p, richest) for p in parts])
    return replace(combined, target=target)


def _distinct_sizes_refiner(q: Query, target: TargetSet) -> RefinerPair:
    """Members paired by size, one subset refiner each"""
    n = q.degree
    left, right = encode_distinct_sizes(q.source), encode_distinct_sizes(q.image)
    if [len(m) for m in left] != [len(m) for m in right]:
        return mismatch_refiner(StackKind.PARTITION, n, target, "distinct-sizes")
    if not left:
        nothing = Stack.empty(StackKind.PARTITION, n)
        return constant_refiner(nothing, nothing, target, "distinct-sizes", perfect=True)
    parts = [constant_refiner(encode_subset(a, n), encode_subset(b, n), target, "subset", True) for a, b in zip(left, right)]
    return replace(list_refiner(parts), target=target)


def refiner_for(q: Query) -> RefinerPair:
    """A constant refiner for the query's transporter, perfect exactly where the encoding is injective"""
    kind = SourceKind(q.kind)
    if q.verb == QueryVerb.TRANSPORTER and q.target is None:
        raise KindMismatch("a transporter query needs a target object")
    target = source_target(q)
    if kind == SourceKind.LIST:
        return _list_refiner(q, target)
    if kind == SourceKind.DISTINCT_SIZES:
        return _distinct_sizes_refiner(q, target)
    if kind == SourceKind.GROUP:
        degrees = {g.degree for g in tuple(q.source) + tuple(q.image)}
        if degrees - {q.degree}:
            raise DegreeMismatch(f"generators of degrees {sorted(degrees)} for degree {q.degree}")
    a = encode_source(kind, q.source, q.degree)
    b = encode_source(kind, q.image, q.degree)
    perfect = _is_perfect(kind, q.source, q.image)
    logger.debug(f"Refiner for {q.verb.value} of {kind.value}: {len(a)}:{len(b)} entries, perfect={perfect}")
    return constant_refiner(a, b, target, f"{q.verb.value}[{kind.value}]", perfect)
