"""Backtrack search for the intersection of the sets several refiners are declared for.

The refiners are applied once, to the empty stacks at the root. When all of
them are perfect the stacks at the root already pin the answer down and the
search closes there. Otherwise the search individualises points of the
domain only, and every leaf is tested for membership in each target.
"""
import logging
from typing import List, Optional, Sequence, Tuple

from .engine import SolveResult, align_extended, solve, target_cell
from .state import CombinedGraph, SearchState, SearchStatistics, colour_refine
from ..errors import DegreeMismatch
from ..models import StackKind
from ..objects.stacks import Stack, lift, stack_concat
from ..perms.groups import GroupCoset, coset_from_elements
from ..perms.permutation import Permutation
from ..refiners.framework import RefinerPair

logger = logging.getLogger(__name__)


def root_stacks(
    refiners: Sequence[RefinerPair], degree: int, stats: Optional[SearchStatistics] = None
) -> Tuple[Stack, Stack]:
    """Every refiner applied to the empty stacks, lifted to one kind and concatenated"""
    outputs = []
    for r in refiners:
        outputs.append((r.left(Stack.empty(r.kind, degree)), r.right(Stack.empty(r.kind, degree))))
        if stats is not None:
            stats.refiner_applications += 1
    kinds = [s.kind for pair in outputs for s in pair if s.entries]
    richest = max(kinds, key=lambda k: k.rank, default=StackKind.DIGRAPH)
    s = t = Stack.empty(richest, degree)
    for a, b in outputs:
        s = stack_concat(s, lift(a, richest))
        t = stack_concat(t, lift(b, richest))
    return s, t


def _combined(s: Stack, t: Stack) -> Optional[Tuple[CombinedGraph, CombinedGraph]]:
    if s.kind == StackKind.EXTENDED:
        return align_extended(s, t)
    vertices = range(1, s.n + 1)
    return (
        CombinedGraph.from_digraphs(lift(s, StackKind.DIGRAPH).entries, vertices),
        CombinedGraph.from_digraphs(lift(t, StackKind.DIGRAPH).entries, vertices),
    )


class IntersectionSearch:
    def __init__(self, refiners: Sequence[RefinerPair], degree: int, stats: Optional[SearchStatistics] = None):
        self.refiners = list(refiners)
        self.degree = degree
        self.omega = frozenset(range(1, degree + 1))
        self.stats = stats or SearchStatistics()
        self.found: List[Permutation] = []

    def run(self, left: CombinedGraph, right: CombinedGraph) -> None:
        self._visit(colour_refine(SearchState.start(left, right, self.stats)))

    def _visit(self, state: SearchState) -> None:
        self.stats.nodes += 1
        if state.dead:
            return
        target = target_cell(state, self.omega)
        if target is None:
            g = self._leaf(state)
            if g is not None and all(r.target.contains(g) for r in self.refiners):
                self.found.append(g)
            return
        left_cell, right_cell = target
        v = left_cell[0]
        for w in right_cell:
            self._visit(colour_refine(state.individualise(v, w)))

    def _leaf(self, state: SearchState) -> Optional[Permutation]:
        by_colour = {c: v for v, c in state.right_colours.items() if v in self.omega}
        images = []
        for v in range(1, self.degree + 1):
            w = by_colour.get(state.left_colours[v])
            if w is None:
                return None
            images.append(w)
        return Permutation(tuple(images))


def intersect(refiners: Sequence[RefinerPair], degree: int, apply_refiners: bool = True) -> SolveResult:
    """The intersection of the refiners' targets as a coset, with the search tree size"""
    for r in refiners:
        if r.degree != degree:
            raise DegreeMismatch(f"refiner {r.name} is on {r.degree} points, not {degree}")
    stats = SearchStatistics()
    if apply_refiners:
        s, t = root_stacks(refiners, degree, stats)
    else:
        s = t = Stack.empty(StackKind.DIGRAPH, degree)
    applied = stats.refiner_applications
    if len(s) != len(t):
        logger.debug("Root stacks differ in length, intersection is empty")
        return SolveResult(GroupCoset.empty_set(degree), 1, refiner_applications=applied)
    if apply_refiners and refiners and all(r.perfect for r in refiners):
        result = solve(s, t)
        logger.debug(f"All {len(refiners)} refiners perfect, closed at the root")
        return SolveResult(result.coset, 1, result.group_order, applied)
    aligned = _combined(s, t)
    if aligned is None:
        return SolveResult(GroupCoset.empty_set(degree), 1, refiner_applications=applied)
    search = IntersectionSearch(refiners, degree, stats)
    search.run(*aligned)
    logger.debug(
        f"Intersection search found {len(search.found)} elements in {stats.nodes} nodes, "
        f"{applied} refiner applications"
    )
    return SolveResult(coset_from_elements(search.found, degree), stats.nodes, refiner_applications=applied)
