"""Encodings of set-valued objects as extended graphs.

Members of a set are indexed in a fixed order (size, then contents) and their
gadget vertices are numbered ascending from n + 1 in that order. Any other
indexing yields the same extended graph.
"""
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from .graph_encoders import flatten_stack
from ..errors import InvariantViolation
from ..objects.digraphs import LabelledDigraph
from ..objects.extended import ExtendedGraph
from ..objects.labels import ANCHOR, BLACK, HASH, RESERVED, WHITE, PLAIN
from ..objects.stacks import Stack
from ..perms.groups import common_degree, enumerate_group
from ..perms.permutation import Permutation

logger = logging.getLogger(__name__)


def _check_points(points: Iterable[int], n: int) -> None:
    for p in points:
        if not 1 <= p <= n:
            raise InvariantViolation("point out of range", f"{p} not in 1..{n}")


def _white_black(n: int, extra: Sequence[int], arcs) -> ExtendedGraph:
    vertices = list(range(1, n + 1)) + list(extra)
    labels = {v: (WHITE if v <= n else BLACK) for v in vertices}
    arcs = set(arcs)
    return ExtendedGraph(n, LabelledDigraph(vertices, arcs, labels, {a: BLACK for a in arcs}))


def encode_set_of_sets(family: Iterable[Iterable[int]], n: int) -> ExtendedGraph:
    """One black vertex per member, with arcs from the member's points to it"""
    members = sorted({frozenset(m) for m in family}, key=lambda m: (len(m), sorted(m)))
    extra, arcs = [], []
    for index, member in enumerate(members, start=1):
        _check_points(member, n)
        vertex = n + index
        extra.append(vertex)
        arcs.extend((p, vertex) for p in member)
    return _white_black(n, extra, arcs)


def encode_set_of_lists(lists: Iterable[Sequence[int]], n: int) -> ExtendedGraph:
    """A chain of position vertices per list, each pointing at its entry"""
    members = sorted({tuple(l) for l in lists}, key=lambda l: (len(l), l))
    extra, arcs = [], []
    next_vertex = n + 1
    has_empty = False
    for member in members:
        if not member:
            has_empty = True
            continue
        _check_points(member, n)
        positions = list(range(next_vertex, next_vertex + len(member)))
        next_vertex += len(member)
        extra.extend(positions)
        arcs.extend(zip(positions, member))
        arcs.extend(zip(positions, positions[1:]))
    if has_empty:
        extra.append(next_vertex)
    return _white_black(n, extra, arcs)


def encode_set_of_digraphs(digraphs: Iterable[LabelledDigraph], n: int) -> ExtendedGraph:
    """A labelled copy of each member, tied to Omega and to its own anchor"""
    members = sorted(set(digraphs), key=lambda d: d.sort_key())
    k = len(members)
    vertices = list(range(1, n + 1))
    vertex_labels = {v: HASH for v in vertices}
    arc_labels = {}
    for index, member in enumerate(members):
        if member.vertices != frozenset(range(1, n + 1)):
            raise InvariantViolation("vertex set is not the domain", f"expected 1..{n}")
        used = set(member.vertex_labels.values()) | set(member.arc_labels.values())
        if used & RESERVED:
            raise InvariantViolation("reserved label used", str(sorted(used & RESERVED)))
        offset = n + index * n
        anchor = n + k * n + index + 1
        vertices.append(anchor)
        vertex_labels[anchor] = ANCHOR
        for v in range(1, n + 1):
            copy = offset + v
            vertices.append(copy)
            vertex_labels[copy] = member.vertex_labels[v]
            arc_labels[(copy, v)] = HASH
            arc_labels[(copy, anchor)] = ANCHOR
        for (a, b), label in member.arc_labels.items():
            arc_labels[(offset + a, offset + b)] = label
    return ExtendedGraph(n, LabelledDigraph(vertices, arc_labels.keys(), vertex_labels, arc_labels))


def encode_set_of_stacks(stacks: Iterable[Stack], n: int) -> ExtendedGraph:
    return encode_set_of_digraphs({flatten_stack(s) for s in stacks}, n)


def orbital_graphs(gens: Sequence[Permutation], degree: Optional[int] = None) -> Tuple[LabelledDigraph, ...]:
    """One digraph per orbit of <gens> on ordered pairs, by least base pair"""
    n = common_degree(gens, degree)
    remaining = {(a, b) for a in range(1, n + 1) for b in range(1, n + 1)}
    result: List[LabelledDigraph] = []
    for base in sorted(remaining):
        if base not in remaining:
            continue
        arcs = {base}
        frontier = [base]
        while frontier:
            a, b = frontier.pop()
            for g in gens:
                image = (g.images[a - 1], g.images[b - 1])
                if image not in arcs:
                    arcs.add(image)
                    frontier.append(image)
        remaining -= arcs
        result.append(LabelledDigraph.uniform(range(1, n + 1), arcs, PLAIN))
    logger.debug(f"Found {len(result)} orbital graphs on {n} points")
    return tuple(result)


def group_as_set_of_lists(gens: Sequence[Permutation], degree: int, cap: Optional[int] = None) -> frozenset:
    """The orbit of [1..n] under the group: its stabiliser is the group itself"""
    return frozenset(g.images for g in enumerate_group(gens, cap, degree))
