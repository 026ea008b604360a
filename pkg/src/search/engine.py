"""Individualise-refine backtracking for stacks of labelled digraphs.

The left side follows one fixed path: at each node the smallest non-singleton
colour class is split by individualising its least vertex. The right side
tries every vertex of the matching class in ascending order. The first leaf
found fixes the transporter representative; for the stabiliser, leaves off
the first path yield generators, and branches whose image is already in the
orbit of the generators found so far are skipped.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .state import CombinedGraph, SearchState, SearchStatistics, colour_refine
from ..errors import DegreeMismatch, KindMismatch
from ..models import StackKind
from ..objects.digraphs import LabelledDigraph
from ..objects.stacks import Stack, lift
from ..perms.groups import GroupCoset, orbit
from ..perms.permutation import Domain, Permutation, restrict

logger = logging.getLogger(__name__)


@dataclass
class SolveResult:
    coset: GroupCoset
    tree_nodes: int
    group_order: Optional[int] = None
    refiner_applications: int = 0
    exact: bool = True

    @property
    def empty(self) -> bool:
        return self.coset.empty

    def order(self, cap: Optional[int] = None) -> int:
        if self.coset.empty:
            return 0
        if self.group_order is not None:
            return self.group_order
        return self.coset.order(cap)


def target_cell(state: SearchState, allowed: Optional[frozenset] = None) -> Optional[Tuple[List[int], List[int]]]:
    """Smallest non-singleton left class (least colour on ties) and its right partner"""
    best = None
    for cell in state.cells("left"):
        if len(cell) < 2 or (allowed is not None and not cell <= allowed):
            continue
        if best is None or len(cell) < len(best):
            best = cell
    if best is None:
        return None
    colour = state.left_colours[min(best)]
    right = sorted(v for v, c in state.right_colours.items() if c == colour)
    return sorted(best), right


def leaf_permutation(state: SearchState) -> Optional[Permutation]:
    """The bijection a discrete node induces, if it really maps left onto right"""
    by_colour = {c: v for v, c in state.right_colours.items()}
    mapping = {v: by_colour[c] for v, c in state.left_colours.items()}
    left, right = state.left, state.right
    for v, w in mapping.items():
        if left.vertex_keys[v] != right.vertex_keys[w]:
            return None
    for (a, b), key in left.arc_keys.items():
        if right.arc_keys.get((mapping[a], mapping[b])) != key:
            return None
    return Permutation(tuple(mapping[v] for v in left.vertices))


class BacktrackSearch:
    def __init__(self, left: CombinedGraph, right: CombinedGraph):
        if left.vertices != tuple(range(1, len(left.vertices) + 1)):
            raise DegreeMismatch("search vertices must be 1..N")
        self.left = left
        self.right = right
        self.stats = SearchStatistics()

    def first_transporter(self) -> Optional[Permutation]:
        root = colour_refine(SearchState.start(self.left, self.right, self.stats))
        return self._first_leaf(root)

    def automorphism_group(self) -> Tuple[List[Permutation], int]:
        """Generators of the stabiliser of the left side, and its order"""
        root = colour_refine(SearchState.start(self.left, self.left, self.stats))
        generators: List[Permutation] = []
        order = self._first_path(root, generators)
        return generators, order

    def _first_leaf(self, state: SearchState) -> Optional[Permutation]:
        self.stats.nodes += 1
        if state.dead:
            return None
        target = target_cell(state)
        if target is None:
            return leaf_permutation(state)
        left_cell, right_cell = target
        v = left_cell[0]
        for w in right_cell:
            found = self._first_leaf(colour_refine(state.individualise(v, w)))
            if found is not None:
                return found
        return None

    def _first_path(self, state: SearchState, generators: List[Permutation]) -> int:
        self.stats.nodes += 1
        target = target_cell(state)
        if target is None:
            return 1
        cell, _ = target
        v = cell[0]
        order = self._first_path(colour_refine(state.individualise(v, v)), generators)
        reached = orbit(v, generators)
        for w in cell[1:]:
            if w in reached:
                continue
            g = self._first_leaf(colour_refine(state.individualise(v, w)))
            if g is not None:
                generators.append(g)
                reached = orbit(v, generators)
        return order * len(reached)


def _digraph_entries(stack: Stack) -> Sequence[LabelledDigraph]:
    if stack.kind == StackKind.EXTENDED:
        raise KindMismatch("extended-graph stacks are solved by solve_extended")
    return lift(stack, StackKind.DIGRAPH).entries


def solve(s: Stack, t: Stack) -> SolveResult:
    """The transporter set of two stacks over {1..n} as a coset"""
    if s.n != t.n:
        raise DegreeMismatch(f"stacks over {s.n} and {t.n} points")
    if StackKind.EXTENDED in (s.kind, t.kind) and (s.entries or t.entries):
        return solve_extended(lift(s, StackKind.EXTENDED), lift(t, StackKind.EXTENDED))
    n = s.n
    if len(s) != len(t):
        return SolveResult(GroupCoset.empty_set(n), 1)
    vertices = range(1, n + 1)
    left = CombinedGraph.from_digraphs(_digraph_entries(s), vertices)
    right = CombinedGraph.from_digraphs(_digraph_entries(t), vertices)
    search = BacktrackSearch(left, right)
    representative = search.first_transporter()
    if representative is None:
        logger.debug(f"Empty transporter after {search.stats.nodes} nodes")
        return SolveResult(GroupCoset.empty_set(n), search.stats.nodes)
    generators, order = search.automorphism_group()
    logger.debug(f"Solved stack pair on {n} points: order {order}, {search.stats.nodes} nodes")
    return SolveResult(_coset(generators, representative, n), search.stats.nodes, order)


def _coset(generators: Sequence[Permutation], representative: Permutation, n: int) -> GroupCoset:
    generators = list(dict.fromkeys(g for g in generators if not g.is_identity()))
    if representative.is_identity():
        return GroupCoset.subgroup(generators, n)
    return GroupCoset.coset(generators, representative)


def _side_marks(n: int, total: int) -> Dict[int, str]:
    return {v: ("w" if v <= n else "b") for v in range(1, total + 1)}


def align_extended(s: Stack, t: Stack) -> Optional[Tuple[CombinedGraph, CombinedGraph]]:
    """Fold two extended-graph stacks onto one vertex set.

    Entry i gets its own block of extra vertices, renamed ascending, so the
    extras of different entries can be renamed independently. Returns None
    when some entry pair has different numbers of extra vertices.
    """
    n = s.n
    left_entries, right_entries = [], []
    offset = n
    for a, b in zip(s.entries, t.entries):
        size = len(a.extra)
        if size != len(b.extra):
            return None
        left_entries.append(a.normalised(offset))
        right_entries.append(b.normalised(offset))
        offset += size
    vertices = range(1, offset + 1)
    marks = _side_marks(n, offset)
    return (
        CombinedGraph.from_digraphs(left_entries, vertices, marks),
        CombinedGraph.from_digraphs(right_entries, vertices, marks),
    )


def solve_extended(s: Stack, t: Stack) -> SolveResult:
    """Transporter of extended-graph stacks, solved on V and restricted to Omega"""
    if s.n != t.n:
        raise DegreeMismatch(f"stacks over {s.n} and {t.n} points")
    n = s.n
    s, t = lift(s, StackKind.EXTENDED), lift(t, StackKind.EXTENDED)
    if len(s) != len(t):
        return SolveResult(GroupCoset.empty_set(n), 1)
    aligned = align_extended(s, t)
    if aligned is None:
        return SolveResult(GroupCoset.empty_set(n), 1)
    search = BacktrackSearch(*aligned)
    representative = search.first_transporter()
    if representative is None:
        return SolveResult(GroupCoset.empty_set(n), search.stats.nodes)
    generators, _ = search.automorphism_group()
    omega = Domain(n)
    restricted = [restrict(g, omega) for g in generators]
    logger.debug(f"Solved extended stacks on {len(aligned[0].vertices)} vertices, {search.stats.nodes} nodes")
    return SolveResult(_coset(restricted, restrict(representative, omega), n), search.stats.nodes)


def pinned_transporter_exists(a: LabelledDigraph, b: LabelledDigraph, n: int) -> bool:
    """Whether a renaming of the vertices above n maps ``a`` onto ``b``"""
    total = max(max(a.vertices, default=n), max(b.vertices, default=n), n)
    if a.vertices != b.vertices or a.vertices != frozenset(range(1, total + 1)):
        return False
    marks = {v: (str(v) if v <= n else "b") for v in range(1, total + 1)}
    vertices = range(1, total + 1)
    search = BacktrackSearch(
        CombinedGraph.from_digraphs([a], vertices, marks),
        CombinedGraph.from_digraphs([b], vertices, marks),
    )
    return search.first_transporter() is not None
