import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from .permutation import Permutation, compose, identity
from ..config import settings
from ..errors import DegreeMismatch, GroupOverflow, InvariantViolation

logger = logging.getLogger(__name__)


def common_degree(gens: Sequence[Permutation], degree: Optional[int] = None) -> int:
    """The degree shared by ``gens`` and ``degree``; an empty generating set needs ``degree``"""
    degrees = {g.degree for g in gens}
    if degree is not None:
        degrees.add(degree)
    if not degrees:
        raise DegreeMismatch("degree is needed for an empty generating set")
    if len(degrees) > 1:
        raise DegreeMismatch(f"generators of mixed degrees {sorted(degrees)}")
    return degrees.pop()


def enumerate_group(
    gens: Sequence[Permutation], cap: Optional[int] = None, degree: Optional[int] = None
) -> List[Permutation]:
    """All elements of <gens> in lexicographic order of their image tables"""
    cap = settings.enumeration_cap if cap is None else cap
    n = common_degree(gens, degree)
    start = identity(n)
    seen: Set[Permutation] = {start}
    frontier = [start]
    while frontier:
        next_frontier = []
        for element in frontier:
            for g in gens:
                product = compose(element, g)
                if product not in seen:
                    seen.add(product)
                    if len(seen) > cap:
                        raise GroupOverflow(cap)
                    next_frontier.append(product)
        frontier = next_frontier
    logger.debug(f"Enumerated group of order {len(seen)} on {n} points")
    return sorted(seen)


def group_order(gens: Sequence[Permutation], cap: Optional[int] = None, degree: Optional[int] = None) -> int:
    return len(enumerate_group(gens, cap, degree))


def orbit(point: int, gens: Iterable[Permutation]) -> Set[int]:
    gens = list(gens)
    result = {point}
    frontier = [point]
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = g.images[p - 1]
            if q not in result:
                result.add(q)
                frontier.append(q)
    return result


def small_generating_set(elements: Iterable[Permutation], degree: int, cap: Optional[int] = None) -> List[Permutation]:
    """Greedy generating set for the group an element list spans"""
    generators: List[Permutation] = []
    covered: Set[Permutation] = {identity(degree)}
    for element in sorted(set(elements)):
        if element not in covered:
            generators.append(element)
            covered = set(enumerate_group(generators, cap, degree))
    return generators


@dataclass(frozen=True)
class GroupCoset:
    """A subgroup G of Sym(n) given by generators, a right coset Gx, or the empty set"""

    degree: int
    generators: Tuple[Permutation, ...] = ()
    representative: Optional[Permutation] = None
    empty: bool = False
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.empty and (self.generators or self.representative is not None):
            raise InvariantViolation("empty coset carries data")
        for g in self.generators:
            if g.degree != self.degree:
                raise DegreeMismatch(f"generator {g} is not of degree {self.degree}")
        if self.representative is not None and self.representative.degree != self.degree:
            raise DegreeMismatch(f"representative {self.representative} is not of degree {self.degree}")

    @classmethod
    def empty_set(cls, degree: int) -> "GroupCoset":
        return cls(degree, empty=True)

    @classmethod
    def subgroup(cls, generators: Iterable[Permutation], degree: int) -> "GroupCoset":
        return cls(degree, tuple(generators))

    @classmethod
    def coset(cls, generators: Iterable[Permutation], representative: Permutation) -> "GroupCoset":
        return cls(representative.degree, tuple(generators), representative)

    @classmethod
    def symmetric(cls, degree: int) -> "GroupCoset":
        if degree < 2:
            return cls(degree)
        gens = [Permutation.from_cycles([(1, 2)], degree)]
        if degree > 2:
            gens.append(Permutation.from_cycles([tuple(range(1, degree + 1))], degree))
        return cls(degree, tuple(gens))

    @property
    def is_subgroup(self) -> bool:
        return not self.empty and (self.representative is None or self.representative.is_identity())

    def group_elements(self, cap: Optional[int] = None) -> List[Permutation]:
        if self.empty:
            return []
        if "group" not in self._cache:
            self._cache["group"] = enumerate_group(self.generators, cap, self.degree)
        return self._cache["group"]

    def elements(self, cap: Optional[int] = None) -> List[Permutation]:
        """All elements ``g * x`` in lexicographic order"""
        group = self.group_elements(cap)
        if self.representative is None:
            return group
        return sorted(compose(g, self.representative) for g in group)

    def element_set(self, cap: Optional[int] = None) -> Set[Permutation]:
        if "set" not in self._cache:
            self._cache["set"] = set(self.elements(cap))
        return self._cache["set"]

    def order(self, cap: Optional[int] = None) -> int:
        return len(self.group_elements(cap))

    def contains(self, g: Permutation, cap: Optional[int] = None) -> bool:
        return g in self.element_set(cap)

    def __str__(self) -> str:
        if self.empty:
            return "empty"
        gens = ", ".join(str(g) for g in self.generators) or "()"
        if self.representative is None:
            return f"<{gens}>"
        return f"<{gens}>{self.representative}"


def coset_from_elements(elements: Iterable[Permutation], degree: int, cap: Optional[int] = None) -> GroupCoset:
    """Express an explicit subgroup or right coset as generators and a representative"""
    elements = sorted(set(elements))
    if not elements:
        return GroupCoset.empty_set(degree)
    representative = elements[0]
    back = representative.inverse()
    group = small_generating_set((compose(e, back) for e in elements), degree, cap)
    if representative.is_identity():
        return GroupCoset.subgroup(group, degree)
    return GroupCoset.coset(group, representative)
