from functools import singledispatch
from typing import Any, Optional

from .digraphs import Digraph, Graph, LabelledDigraph
from .extended import ExtendedGraph
from .partitions import OrderedPartition
from .stacks import Stack
from ..errors import InvariantViolation


@singledispatch
def validate(obj: Any, n: Optional[int] = None) -> Any:
    """Return ``obj`` unchanged if every type invariant holds"""
    return obj


def _check_points(points, n: Optional[int], what: str) -> None:
    for p in points:
        if not isinstance(p, int) or p < 1 or (n is not None and p > n):
            raise InvariantViolation("point out of range", f"{what} contains {p!r}")


@validate.register
def _(obj: int, n: Optional[int] = None) -> int:
    _check_points([obj], n, "point")
    return obj


@validate.register
def _(obj: OrderedPartition, n: Optional[int] = None) -> OrderedPartition:
    seen = set()
    for cell in obj.cells:
        if not cell:
            raise InvariantViolation("empty cell", str(obj))
        if seen & cell:
            raise InvariantViolation("cells intersect", str(obj))
        seen |= cell
    _check_points(seen, n, "partition")
    expected = set(range(1, (n if n is not None else len(seen)) + 1))
    if seen != expected:
        raise InvariantViolation("cells do not cover the domain", str(obj))
    return obj


@validate.register
def _(obj: Graph, n: Optional[int] = None) -> Graph:
    for edge in obj.edges:
        if len(edge) != 2:
            raise InvariantViolation("edge is not a 2-subset", str(sorted(edge)))
        _check_points(edge, obj.n, "graph")
    return obj


@validate.register
def _(obj: Digraph, n: Optional[int] = None) -> Digraph:
    for arc in obj.arcs:
        _check_points(arc, obj.n, "digraph")
    return obj


def _check_label(label: Any, where: str) -> None:
    if not isinstance(label, str) or not label or any(ch.isspace() for ch in label):
        raise InvariantViolation("bad label", f"{where} has label {label!r}")


@validate.register
def _(obj: LabelledDigraph, n: Optional[int] = None) -> LabelledDigraph:
    vertices = obj.vertices
    _check_points(vertices, None, "digraph")
    if n is not None and vertices != frozenset(range(1, n + 1)):
        raise InvariantViolation("vertex set is not the domain", f"expected 1..{n}")
    for a, b in obj.arcs:
        if a not in vertices or b not in vertices:
            raise InvariantViolation("arc endpoint outside vertex set", f"({a},{b})")
    for v in vertices:
        if v not in obj.vertex_labels:
            raise InvariantViolation("unlabelled vertex", str(v))
        _check_label(obj.vertex_labels[v], f"vertex {v}")
    for arc in obj.arcs:
        if arc not in obj.arc_labels:
            raise InvariantViolation("unlabelled arc", str(arc))
        _check_label(obj.arc_labels[arc], f"arc {arc}")
    if set(obj.vertex_labels) - vertices or set(obj.arc_labels) - obj.arcs:
        raise InvariantViolation("label on a missing vertex or arc")
    return obj


@validate.register
def _(obj: ExtendedGraph, n: Optional[int] = None) -> ExtendedGraph:
    if n is not None and obj.n != n:
        raise InvariantViolation("extended graph on the wrong domain", f"{obj.n} != {n}")
    rep = validate(obj.representative)
    missing = set(range(1, obj.n + 1)) - rep.vertices
    if missing:
        raise InvariantViolation("domain not contained in vertex set", str(sorted(missing)))
    omega_labels = {rep.vertex_labels[v] for v in range(1, obj.n + 1)}
    extra_labels = {rep.vertex_labels[v] for v in obj.extra}
    if omega_labels & extra_labels:
        raise InvariantViolation("label shared by domain and extra vertices", str(sorted(omega_labels & extra_labels)))
    return obj


@validate.register
def _(obj: Stack, n: Optional[int] = None) -> Stack:
    if n is not None and obj.n != n:
        raise InvariantViolation("stack on the wrong domain", f"{obj.n} != {n}")
    for entry in obj.entries:
        if not isinstance(entry, obj.entry_type) or isinstance(entry, bool):
            raise InvariantViolation("stack entry of the wrong kind", f"{type(entry).__name__} in {obj.kind.value} stack")
        validate(entry, obj.n)
    return obj
