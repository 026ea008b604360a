"""Search nodes and colour refinement.

A stack of labelled digraphs on a vertex set V is folded into one
``CombinedGraph``: each vertex carries the tuple of its labels across the
entries, each ordered pair carries the tuple of (entry, label) for the entries
containing that arc. A permutation of V maps one stack to another iff it maps
the combined graphs onto each other.
"""
from collections import Counter, defaultdict
from dataclasses import dataclass, field, replace
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..objects.digraphs import LabelledDigraph
from ..objects.labels import ABSENT

Colouring = Dict[int, int]


@dataclass(frozen=True)
class CombinedGraph:
    vertices: Tuple[int, ...]
    vertex_keys: Dict[int, tuple]
    arc_keys: Dict[Tuple[int, int], tuple]

    @classmethod
    def from_digraphs(
        cls, entries: Sequence[LabelledDigraph], vertices: Sequence[int], marks: Optional[Dict[int, str]] = None
    ) -> "CombinedGraph":
        """Fold ``entries`` onto ``vertices``; ``marks`` adds one more label per vertex"""
        vertex_keys = {}
        for v in vertices:
            key = tuple(e.vertex_labels.get(v, ABSENT) for e in entries)
            if marks is not None:
                key = (marks.get(v, ""),) + key
            vertex_keys[v] = key
        arc_keys: Dict[Tuple[int, int], list] = defaultdict(list)
        for position, entry in enumerate(entries):
            for arc, label in entry.arc_labels.items():
                arc_keys[arc].append((position, label))
        return cls(tuple(sorted(vertices)), vertex_keys, {a: tuple(k) for a, k in arc_keys.items()})


@dataclass
class SearchStatistics:
    nodes: int = 0
    refiner_applications: int = 0
    refinement_rounds: int = 0


class _Coder:
    """Shared integer codes so that both sides of a node use one colour space"""

    def __init__(self, left: CombinedGraph, right: CombinedGraph):
        arc_values = sorted(set(left.arc_keys.values()) | set(right.arc_keys.values()))
        self.arc_code = {k: i for i, k in enumerate(arc_values)}
        vertex_values = sorted(set(left.vertex_keys.values()) | set(right.vertex_keys.values()))
        self.vertex_code = {k: i for i, k in enumerate(vertex_values)}


class _Adjacency:
    """Per-vertex out and in lists of (neighbour, forward code, backward code)"""

    def __init__(self, graph: CombinedGraph, coder: _Coder):
        self.loops: Dict[int, int] = {}
        self.out: Dict[int, List[Tuple[int, int, int]]] = {v: [] for v in graph.vertices}
        self.inn: Dict[int, List[Tuple[int, int, int]]] = {v: [] for v in graph.vertices}
        codes = {arc: coder.arc_code[key] for arc, key in graph.arc_keys.items()}
        for (a, b), code in codes.items():
            if a == b:
                self.loops[a] = code
                continue
            back = codes.get((b, a), -1)
            self.out[a].append((b, code, back))
            self.inn[b].append((a, code, back))
        self.codes = codes


@dataclass
class SearchState:
    """A node of the search: both sides plus their aligned colourings"""

    left: CombinedGraph
    right: CombinedGraph
    left_colours: Colouring
    right_colours: Colouring
    dead: bool = False
    stats: SearchStatistics = field(default_factory=SearchStatistics)
    _adjacency: Optional[Tuple[_Adjacency, _Adjacency]] = field(default=None, repr=False)

    @classmethod
    def start(cls, left: CombinedGraph, right: CombinedGraph, stats: Optional[SearchStatistics] = None) -> "SearchState":
        stats = stats or SearchStatistics()
        if left.vertices != right.vertices or len(left.arc_keys) != len(right.arc_keys):
            return cls(left, right, {}, {}, dead=True, stats=stats)
        coder = _Coder(left, right)
        adjacency = (_Adjacency(left, coder), _Adjacency(right, coder))
        left_colours = {v: coder.vertex_code[left.vertex_keys[v]] for v in left.vertices}
        right_colours = {v: coder.vertex_code[right.vertex_keys[v]] for v in right.vertices}
        dead = Counter(left_colours.values()) != Counter(right_colours.values())
        if not dead:
            dead = Counter(adjacency[0].codes.values()) != Counter(adjacency[1].codes.values())
        return cls(left, right, left_colours, right_colours, dead, stats, adjacency)

    @classmethod
    def from_digraph_stacks(
        cls, left: Sequence[LabelledDigraph], right: Sequence[LabelledDigraph], vertices: Sequence[int]
    ) -> "SearchState":
        return cls.start(CombinedGraph.from_digraphs(left, vertices), CombinedGraph.from_digraphs(right, vertices))

    def cells(self, side: str = "left") -> List[FrozenSet[int]]:
        """Colour classes ordered by colour"""
        colours = self.left_colours if side == "left" else self.right_colours
        classes: Dict[int, set] = defaultdict(set)
        for v, c in colours.items():
            classes[c].add(v)
        return [frozenset(classes[c]) for c in sorted(classes)]

    def is_discrete(self) -> bool:
        return len(set(self.left_colours.values())) == len(self.left_colours)

    def individualise(self, left_vertex: int, right_vertex: int) -> "SearchState":
        fresh = max(self.left_colours.values()) + 1
        left_colours = dict(self.left_colours)
        right_colours = dict(self.right_colours)
        left_colours[left_vertex] = fresh
        right_colours[right_vertex] = fresh
        return replace(self, left_colours=left_colours, right_colours=right_colours)


def _signature(v: int, colours: Colouring, adjacency: _Adjacency) -> tuple:
    return (
        colours[v],
        adjacency.loops.get(v, -1),
        tuple(sorted((fwd, back, colours[w]) for w, fwd, back in adjacency.out[v])),
        tuple(sorted((fwd, back, colours[u]) for u, fwd, back in adjacency.inn[v])),
    )


def colour_refine(state: SearchState) -> SearchState:
    """Refine both colourings to a common fixpoint; mismatched class sizes kill the node"""
    if state.dead:
        return state
    if state._adjacency is None:
        state = SearchState.start(state.left, state.right, state.stats)
        if state.dead:
            return state
    left_adj, right_adj = state._adjacency
    left, right = state.left_colours, state.right_colours
    count = len(set(left.values()))
    while True:
        state.stats.refinement_rounds += 1
        left_sig = {v: _signature(v, left, left_adj) for v in left}
        right_sig = {v: _signature(v, right, right_adj) for v in right}
        if Counter(left_sig.values()) != Counter(right_sig.values()):
            return replace(state, left_colours=left, right_colours=right, dead=True)
        order = {s: i for i, s in enumerate(sorted(set(left_sig.values())))}
        left = {v: order[s] for v, s in left_sig.items()}
        right = {v: order[s] for v, s in right_sig.items()}
        new_count = len(order)
        if new_count == count:
            break
        count = new_count
    return replace(state, left_colours=left, right_colours=right, dead=False)
