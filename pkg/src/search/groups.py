"""Group computations built on orbital graphs.

The 2-closure is the stabiliser of the stack of all orbital graphs. The
stabiliser of the set of orbital graphs contains the normaliser, and exact
normalisers and conjugacy transporters are filtered out of it by enumeration.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from .engine import SolveResult, solve
from .queries import solve_query
from ..config import settings
from ..encoders.extended_encoders import encode_set_of_digraphs, orbital_graphs
from ..encoders.factory import Query, conjugation_predicate
from ..errors import GroupOverflow
from ..models import QueryVerb, SourceKind, StackKind
from ..objects.stacks import Stack
from ..perms.groups import GroupCoset, common_degree, coset_from_elements, group_order
from ..perms.permutation import Permutation

logger = logging.getLogger(__name__)


@dataclass
class GroupComputation:
    coset: GroupCoset
    exact: bool
    tree_nodes: int

    @property
    def empty(self) -> bool:
        return self.coset.empty


def _degree(gens: Sequence[Permutation], degree: Optional[int]) -> int:
    return common_degree(gens, degree)


def _orbital_stack(gens: Sequence[Permutation], n: int) -> Stack:
    return Stack(StackKind.DIGRAPH, n, orbital_graphs(gens, n))


def _orbital_set(gens: Sequence[Permutation], n: int) -> Stack:
    return Stack(StackKind.EXTENDED, n, [encode_set_of_digraphs(orbital_graphs(gens, n), n)])


def two_closure_result(gens: Sequence[Permutation], degree: Optional[int] = None) -> SolveResult:
    n = _degree(gens, degree)
    stack = _orbital_stack(gens, n)
    return solve(stack, stack)


def two_closure(gens: Sequence[Permutation], degree: Optional[int] = None) -> GroupCoset:
    """Largest subgroup of Sym(n) with the same orbits on ordered pairs"""
    return two_closure_result(gens, degree).coset


def is_two_closed(gens: Sequence[Permutation], degree: Optional[int] = None, cap: Optional[int] = None) -> bool:
    n = _degree(gens, degree)
    closure = two_closure_result(gens, n)
    own = group_order(gens, cap, n)
    logger.debug(f"Group of order {own} has 2-closure of order {closure.order(cap)}")
    return own == closure.order(cap)


def overgroup_result(gens: Sequence[Permutation], degree: Optional[int] = None) -> SolveResult:
    n = _degree(gens, degree)
    stack = _orbital_set(gens, n)
    return solve(stack, stack)


def normaliser_overgroup(gens: Sequence[Permutation], degree: Optional[int] = None) -> GroupCoset:
    """Stabiliser of the set of orbital graphs, the normaliser of the 2-closure"""
    return overgroup_result(gens, degree).coset


def _filter(
    found: SolveResult, gens: Sequence[Permutation], other: Sequence[Permutation], n: int, cap: int
) -> GroupComputation:
    if found.empty:
        return GroupComputation(found.coset, True, found.tree_nodes)
    try:
        size = found.order(cap)
    except GroupOverflow:
        logger.warning(f"Overgroup exceeds {cap} elements, returning it unfiltered")
        return GroupComputation(found.coset, False, found.tree_nodes)
    conjugates = conjugation_predicate(gens, other, n)
    kept = [x for x in found.coset.elements() if conjugates(x)]
    logger.debug(f"Kept {len(kept)} of {size} overgroup elements")
    return GroupComputation(coset_from_elements(kept, n), True, found.tree_nodes)


def normaliser(gens: Sequence[Permutation], degree: Optional[int] = None, cap: Optional[int] = None) -> GroupComputation:
    """N_Sym(n)(<gens>), exact whenever the overgroup has at most ``cap`` elements"""
    n = _degree(gens, degree)
    cap = settings.normaliser_cap if cap is None else cap
    return _filter(overgroup_result(gens, n), gens, gens, n, cap)


def conjugacy_transporter(
    gens: Sequence[Permutation], other: Sequence[Permutation], degree: Optional[int] = None, cap: Optional[int] = None
) -> GroupComputation:
    """Every x with <gens>^x = <other>, as a right coset of the normaliser"""
    n = _degree(gens, degree)
    cap = settings.normaliser_cap if cap is None else cap
    found = solve(_orbital_set(gens, n), _orbital_set(other, n))
    return _filter(found, gens, other, n, cap)


def centraliser(gens: Sequence[Permutation], degree: Optional[int] = None) -> GroupCoset:
    """Elements commuting with every generator: the stabiliser of the generator list under conjugation"""
    n = _degree(gens, degree)
    return solve_query(Query(QueryVerb.STABILISER, SourceKind.PERM_LIST, n, tuple(gens))).coset
