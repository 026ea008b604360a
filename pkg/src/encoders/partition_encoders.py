from typing import FrozenSet, Iterable, Tuple

from ..errors import InvariantViolation
from ..models import StackKind
from ..objects.partitions import OrderedPartition
from ..objects.stacks import Stack


def encode_subset(subset: Iterable[int], n: int) -> Stack:
    """[] for the empty set, [[Omega]] for Omega, otherwise [[A, Omega - A]]"""
    subset = frozenset(subset)
    omega = frozenset(range(1, n + 1))
    if not subset <= omega:
        raise InvariantViolation("point out of range", f"{sorted(subset - omega)} not in 1..{n}")
    if not subset:
        return Stack.empty(StackKind.PARTITION, n)
    if subset == omega:
        return Stack(StackKind.PARTITION, n, [OrderedPartition((omega,))])
    return Stack(StackKind.PARTITION, n, [OrderedPartition((subset, omega - subset))])


def encode_distinct_sizes(family: Iterable[Iterable[int]]) -> Tuple[FrozenSet[int], ...]:
    """Members listed by increasing size; sizes must be pairwise distinct"""
    members = sorted({frozenset(m) for m in family}, key=len)
    sizes = [len(m) for m in members]
    if len(set(sizes)) != len(sizes):
        raise InvariantViolation("two members of equal size", str([sorted(m) for m in members]))
    return tuple(members)
