from typing import TYPE_CHECKING, Callable, Iterable, List, Optional, Sequence, Set

from ..errors import RefineryError
from ..models import TargetMode
from ..perms.groups import GroupCoset
from ..perms.permutation import Permutation

if TYPE_CHECKING:
    from ..oracle.brute import OracleConfig

Predicate = Callable[[Permutation], bool]


class TargetSet:
    """The subset of Sym(n) a refiner is declared for"""

    def __init__(
        self,
        mode: TargetMode,
        degree: int,
        generators: Sequence[Permutation] = (),
        representative: Optional[Permutation] = None,
        predicate: Optional[Predicate] = None,
        name: str = "",
    ):
        self.mode = TargetMode(mode)
        self.degree = degree
        self.generators = tuple(generators)
        self.representative = representative
        self.predicate = predicate
        self.name = name or self.mode.value
        self._coset: Optional[GroupCoset] = None
        self._elements: Optional[List[Permutation]] = None

    @classmethod
    def empty(cls, degree: int) -> "TargetSet":
        return cls(TargetMode.EMPTY, degree, name="empty")

    @classmethod
    def subgroup(cls, generators: Iterable[Permutation], degree: int, name: str = "") -> "TargetSet":
        return cls(TargetMode.SUBGROUP, degree, tuple(generators), name=name)

    @classmethod
    def coset(cls, generators: Iterable[Permutation], representative: Permutation, name: str = "") -> "TargetSet":
        return cls(TargetMode.COSET, representative.degree, tuple(generators), representative, name=name)

    @classmethod
    def symmetric(cls, degree: int) -> "TargetSet":
        return cls.subgroup(GroupCoset.symmetric(degree).generators, degree, name=f"Sym({degree})")

    @classmethod
    def from_predicate(cls, degree: int, predicate: Predicate, name: str) -> "TargetSet":
        return cls(TargetMode.PREDICATE, degree, predicate=predicate, name=name)

    @classmethod
    def from_coset(cls, coset: GroupCoset, name: str = "") -> "TargetSet":
        if coset.empty:
            return cls.empty(coset.degree)
        if coset.representative is None:
            return cls.subgroup(coset.generators, coset.degree, name)
        return cls.coset(coset.generators, coset.representative, name)

    def as_coset(self) -> GroupCoset:
        if self.mode == TargetMode.PREDICATE:
            raise RefineryError("predicate targets have no generators")
        if self._coset is None:
            if self.mode == TargetMode.EMPTY:
                self._coset = GroupCoset.empty_set(self.degree)
            else:
                self._coset = GroupCoset(self.degree, self.generators, self.representative)
        return self._coset

    def contains(self, g: Permutation, cap: Optional[int] = None) -> bool:
        if self.mode == TargetMode.EMPTY:
            return False
        if self.mode == TargetMode.PREDICATE:
            return bool(self.predicate(g))
        return self.as_coset().contains(g, cap)

    def elements(self, cap: Optional[int] = None, config: Optional["OracleConfig"] = None) -> List[Permutation]:
        """Every member; predicate targets are enumerated over Sym(n) within the oracle's ``config``"""
        if self._elements is None:
            if self.mode == TargetMode.PREDICATE:
                from ..oracle.brute import brute_filter

                self._elements = brute_filter(self.predicate, self.degree, config)
            else:
                self._elements = self.as_coset().elements(cap)
        return self._elements

    def element_set(self, cap: Optional[int] = None, config: Optional["OracleConfig"] = None) -> Set[Permutation]:
        return set(self.elements(cap, config))

    def intersection(self, other: "TargetSet") -> "TargetSet":
        if self.mode == TargetMode.EMPTY or other.mode == TargetMode.EMPTY:
            return TargetSet.empty(self.degree)
        if self.degree != other.degree:
            raise RefineryError(f"targets of degrees {self.degree} and {other.degree}")
        return TargetSet.from_predicate(
            self.degree, lambda g: self.contains(g) and other.contains(g), f"({self.name} & {other.name})"
        )

    def __repr__(self) -> str:
        return f"TargetSet({self.mode.value}, degree={self.degree}, name={self.name!r})"
