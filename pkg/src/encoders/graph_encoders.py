import json
from typing import Iterable, Optional, Union

from ..errors import InvariantViolation, KindMismatch
from ..models import StackKind
from ..objects.digraphs import Digraph, Graph, LabelledDigraph
from ..objects.labels import PLAIN
from ..objects.stacks import Stack
from ..perms.permutation import Permutation


def graph_to_labelled(graph: Union[Graph, Digraph], n: Optional[int] = None) -> LabelledDigraph:
    """Symmetrise graphs, then give every vertex and arc the same label"""
    if n is not None and graph.n != n:
        raise InvariantViolation("vertex set is not the domain", f"{graph.n} != {n}")
    if isinstance(graph, Graph):
        arcs = set()
        for edge in graph.edges:
            a, b = sorted(edge)
            arcs.update({(a, b), (b, a)})
    elif isinstance(graph, Digraph):
        arcs = set(graph.arcs)
    else:
        raise KindMismatch(f"expected a graph or digraph, got {type(graph).__name__}")
    return LabelledDigraph.uniform(range(1, graph.n + 1), arcs, PLAIN)


def is_disjoint_family(family: Iterable[Iterable[int]]) -> bool:
    members = [frozenset(m) for m in family]
    if any(not m for m in members):
        return False
    seen = set()
    for m in members:
        if seen & m:
            return False
        seen |= m
    return True


def encode_disjoint_sets(family: Iterable[Iterable[int]], n: int) -> LabelledDigraph:
    """Clique plus loops on each member"""
    arcs = set()
    for member in family:
        points = sorted(member)
        if any(not 1 <= p <= n for p in points):
            raise InvariantViolation("point out of range", f"{points} not in 1..{n}")
        arcs.update((a, b) for a in points for b in points)
    return LabelledDigraph.uniform(range(1, n + 1), arcs, PLAIN)


def encode_perm_conj(g: Permutation) -> LabelledDigraph:
    """Functional digraph of ``g``: an arc from every point to its image"""
    return LabelledDigraph.uniform(
        range(1, g.degree + 1), ((a, g.images[a - 1]) for a in range(1, g.degree + 1)), PLAIN
    )


def _tagged(pairs) -> str:
    return json.dumps(pairs, separators=(",", ":"))


def flatten_stack(stack: Stack) -> LabelledDigraph:
    """Fold a digraph stack into one digraph with position-tagged labels"""
    if stack.entries and stack.kind != StackKind.DIGRAPH:
        raise KindMismatch(f"cannot flatten a {stack.kind.value} stack")
    n = stack.n
    vertex_labels = {
        v: _tagged([[i, entry.vertex_labels[v]] for i, entry in enumerate(stack.entries, start=1)])
        for v in range(1, n + 1)
    }
    arcs = set()
    for entry in stack.entries:
        arcs |= entry.arcs
    arc_labels = {
        arc: _tagged([[i, entry.arc_labels[arc]] for i, entry in enumerate(stack.entries, start=1) if arc in entry.arcs])
        for arc in arcs
    }
    return LabelledDigraph(range(1, n + 1), arcs, vertex_labels, arc_labels)
