"""The action of Sym(Omega) on every object kind.

Sets, lists and nested containers act elementwise; labels travel with their
vertices and arcs; permutations are acted on by conjugation.
"""
from functools import singledispatch
from typing import Any

from .permutation import Permutation, compose
from ..errors import DegreeMismatch, RefineryError
from ..objects.digraphs import Digraph, Graph, LabelledDigraph
from ..objects.extended import ExtendedGraph
from ..objects.partitions import OrderedPartition
from ..objects.stacks import Stack


@singledispatch
def _act(x: Any, g: Permutation) -> Any:
    raise RefineryError(f"no action defined on {type(x).__name__}")


@_act.register
def _(x: int, g: Permutation) -> int:
    return g.image(x)


@_act.register(frozenset)
@_act.register(set)
def _(x, g: Permutation) -> frozenset:
    return frozenset(_act(e, g) for e in x)


@_act.register(tuple)
@_act.register(list)
def _(x, g: Permutation) -> tuple:
    return tuple(_act(e, g) for e in x)


@_act.register
def _(x: OrderedPartition, g: Permutation) -> OrderedPartition:
    return OrderedPartition(tuple(frozenset(g.image(p) for p in cell) for cell in x.cells))


@_act.register
def _(x: Graph, g: Permutation) -> Graph:
    _check_degree(g, x.n)
    return Graph(x.n, frozenset(frozenset(g.image(p) for p in e) for e in x.edges))


@_act.register
def _(x: Digraph, g: Permutation) -> Digraph:
    _check_degree(g, x.n)
    return Digraph(x.n, frozenset((g.image(a), g.image(b)) for a, b in x.arcs))


@_act.register
def _(x: LabelledDigraph, g: Permutation) -> LabelledDigraph:
    return x.relabel({v: g.image(v) for v in x.vertices})


@_act.register
def _(x: ExtendedGraph, g: Permutation) -> ExtendedGraph:
    _check_degree(g, x.n)
    mapping = {v: g.images[v - 1] for v in x.representative.vertices if v <= x.n}
    return ExtendedGraph(x.n, x.representative.relabel(mapping))


@_act.register
def _(x: Stack, g: Permutation) -> Stack:
    return Stack(x.kind, x.n, (_act(e, g) for e in x.entries))


@_act.register
def _(x: Permutation, g: Permutation) -> Permutation:
    return compose(compose(g.inverse(), x), g)


def _check_degree(g: Permutation, n: int) -> None:
    if g.degree != n:
        raise DegreeMismatch(f"permutation of degree {g.degree} on objects over {n} points")


def act(g: Permutation, x: Any) -> Any:
    """The image ``x^g``"""
    return _act(x, g)


def maps_to(g: Permutation, x: Any, y: Any) -> bool:
    """Whether ``x^g == y``; stacks are compared entry by entry and stop early"""
    if isinstance(x, Stack) and isinstance(y, Stack):
        if len(x) != len(y) or x.n != y.n:
            return False
        return all(_act(a, g) == b for a, b in zip(x.entries, y.entries))
    return _act(x, g) == y
