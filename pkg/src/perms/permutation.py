"""Permutations of {1, ..., n} acting on the right by exponentiation.

The product ``p * q`` applies ``p`` first, so ``a^(pq) = (a^p)^q``.
"""
import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..errors import DegreeMismatch, InvariantViolation, ParseError

_CYCLE = re.compile(r"\(([^()]*)\)")
_CYCLE_TEXT = re.compile(r"^\s*(\([^()]*\)\s*)+$")


@dataclass(frozen=True)
class Domain:
    """The ground set {1, ..., n}. Extra vertices are always numbered above n."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvariantViolation("domain is empty", f"n={self.n}")

    def __contains__(self, point: object) -> bool:
        return isinstance(point, int) and 1 <= point <= self.n


@dataclass(frozen=True, order=True)
class Permutation:
    """Dense image table: ``images[i - 1]`` is the image of point ``i``"""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvariantViolation("not a permutation", str(images))

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        result = cls.identity(degree)
        for cycle in cycles:
            result = result * _single_cycle(cycle, degree)
        return result

    @property
    def degree(self) -> int:
        return len(self.images)

    def image(self, point: int) -> int:
        if not 1 <= point <= self.degree:
            raise DegreeMismatch(f"point {point} outside degree {self.degree}")
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        table = [0] * self.degree
        for point, target in enumerate(self.images, start=1):
            table[target - 1] = point
        return Permutation(tuple(table))

    def is_identity(self) -> bool:
        return all(target == point for point, target in enumerate(self.images, start=1))

    def moved_points(self) -> List[int]:
        return [point for point, target in enumerate(self.images, start=1) if target != point]

    def cycles(self) -> List[Tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least point"""
        seen = set()
        result = []
        for start in range(1, self.degree + 1):
            if start in seen or self.images[start - 1] == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start - 1]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point - 1]
            result.append(tuple(cycle))
        return result

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in cycle) + ")" for cycle in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self}, degree={self.degree})"


def _single_cycle(cycle: Sequence[int], degree: int) -> Permutation:
    table = list(range(1, degree + 1))
    points = list(cycle)
    for point in points:
        if not 1 <= point <= degree:
            raise ParseError(f"point {point} out of range 1..{degree}")
    if len(set(points)) != len(points):
        raise ParseError(f"repeated point in cycle {tuple(points)}")
    for i, point in enumerate(points):
        table[point - 1] = points[(i + 1) % len(points)]
    return Permutation(tuple(table))


def parse_perm(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as ``(1 2)(3 6 5)``; cycles compose left to right"""
    if degree < 1:
        raise ParseError(f"degree must be positive, got {degree}")
    if not _CYCLE_TEXT.match(text or ""):
        raise ParseError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE.findall(text):
        tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
        try:
            cycles.append([int(t) for t in tokens])
        except ValueError:
            raise ParseError(f"malformed cycle notation: {text!r}")
    return Permutation.from_cycles(cycles, degree)


def compose(p: Permutation, q: Permutation) -> Permutation:
    if p.degree != q.degree:
        raise DegreeMismatch(f"cannot compose degrees {p.degree} and {q.degree}")
    return Permutation(tuple(q.images[target - 1] for target in p.images))


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def identity(degree: int) -> Permutation:
    return Permutation.identity(degree)


def restrict(p: Permutation, omega: Domain) -> Permutation:
    """Restriction of ``p`` to {1..n}; ``p`` must preserve that set"""
    n = omega.n
    if n > p.degree:
        raise DegreeMismatch(f"cannot restrict degree {p.degree} to {n}")
    head = p.images[:n]
    if any(target > n for target in head):
        raise InvariantViolation("permutation does not preserve the domain", str(p))
    return Permutation(head)
