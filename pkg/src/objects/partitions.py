from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple


@dataclass(frozen=True)
class OrderedPartition:
    """A list of nonempty disjoint cells covering {1..n}"""

    cells: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(frozenset(c) for c in self.cells))

    @classmethod
    def of(cls, *cells: Iterable[int]) -> "OrderedPartition":
        return cls(tuple(frozenset(c) for c in cells))

    @property
    def degree(self) -> int:
        return sum(len(c) for c in self.cells)

    def points(self) -> FrozenSet[int]:
        return frozenset().union(*self.cells) if self.cells else frozenset()

    def cell_of(self, point: int) -> int:
        for index, cell in enumerate(self.cells):
            if point in cell:
                return index
        raise KeyError(point)

    def __len__(self) -> int:
        return len(self.cells)

    def __str__(self) -> str:
        return "[" + "|".join("{" + ",".join(str(p) for p in sorted(c)) + "}" for c in self.cells) + "]"
