"""Refiner pairs and the operations that build new refiners from old ones.

A refiner for a set U is a pair of stack functions (f_L, f_R) such that every
element of U that maps S to T also maps f_L(S) to f_R(T). It is perfect when,
for stacks of equal length, U intersected with Iso(S, T) is exactly the
transporter of the extended stacks S || f_L(S) and T || f_R(T).
"""
import logging
from dataclasses import dataclass, replace
from functools import reduce
from typing import Callable, Optional, Sequence, Tuple

from .targets import TargetSet
from ..errors import DegreeMismatch, KindMismatch, RefineryError
from ..models import StackKind, TargetMode
from ..objects.stacks import Stack, lift, stack_concat, trivial_entry
from ..perms.actions import act
from ..perms.permutation import Permutation

logger = logging.getLogger(__name__)

StackFunction = Callable[[Stack], Stack]


@dataclass(frozen=True)
class RefinerPair:
    name: str
    kind: StackKind
    degree: int
    left: StackFunction
    right: StackFunction
    target: TargetSet
    perfect: bool = False
    images: Optional[Tuple[Stack, Stack]] = None

    def apply(self, s: Stack, t: Stack) -> Tuple[Stack, Stack]:
        """Extend a pair of stacks by the refiner's outputs"""
        return stack_concat(s, self.left(s)), stack_concat(t, self.right(t))


def _constant(stack: Stack) -> StackFunction:
    def function(_: Stack) -> Stack:
        return stack

    return function


def _output_kind(a: Stack, b: Stack) -> StackKind:
    if a.entries and b.entries and a.kind != b.kind:
        raise KindMismatch(f"constant images of kinds {a.kind.value} and {b.kind.value}")
    return a.kind if a.entries else b.kind


def constant_refiner(
    a: Stack, b: Stack, target: TargetSet, name: Optional[str] = None, perfect: bool = False
) -> RefinerPair:
    """(S -> A, T -> B); a refiner for any subset of Iso(A, B), perfect for Iso(A, B) itself"""
    if a.n != b.n:
        raise DegreeMismatch(f"constant images over {a.n} and {b.n} points")
    kind = _output_kind(a, b)
    return RefinerPair(name or f"const[{len(a)}:{len(b)}]", kind, a.n, _constant(a), _constant(b), target, perfect, (a, b))


def identity_refiner(kind: StackKind, degree: int, target: TargetSet) -> RefinerPair:
    return RefinerPair("identity", StackKind(kind), degree, lambda s: s, lambda t: t, target)


def empty_refiner(kind: StackKind, degree: int, target: TargetSet) -> RefinerPair:
    nothing = Stack.empty(kind, degree)
    return RefinerPair("empty", StackKind(kind), degree, _constant(nothing), _constant(nothing), target, images=(nothing, nothing))


def mismatch_refiner(
    kind: StackKind, degree: int, target: TargetSet, name: str = "mismatch", perfect: bool = True
) -> RefinerPair:
    """Images of lengths 0 and 1, so no stacks of equal length survive it"""
    nothing = Stack.empty(kind, degree)
    marker = Stack(kind, degree, [trivial_entry(kind, degree)])
    return constant_refiner(nothing, marker, target, name, perfect)


def conjugate_refiner(f: StackFunction, x: Permutation) -> StackFunction:
    """S -> f(S^(x^-1))^x"""
    back = x.inverse()

    def conjugated(s: Stack) -> Stack:
        return act(x, f(act(back, s)))

    return conjugated


def coset_refiner(group_refiner: RefinerPair, x: Permutation) -> RefinerPair:
    """(f_L, f_L^x) for the coset Gx of the refiner's subgroup target G"""
    target = group_refiner.target
    if target.mode != TargetMode.SUBGROUP:
        raise RefineryError(f"coset refiners need a subgroup target, got {target.mode.value}")
    images = None
    if group_refiner.images is not None:
        a = group_refiner.images[0]
        images = (a, act(x, a))
    return RefinerPair(
        f"{group_refiner.name}^{x}",
        group_refiner.kind,
        group_refiner.degree,
        group_refiner.left,
        conjugate_refiner(group_refiner.left, x),
        TargetSet.coset(target.generators, x, f"{target.name}{x}"),
        group_refiner.perfect,
        images,
    )


def _lengths_disagree(r: RefinerPair) -> bool:
    return r.images is not None and len(r.images[0]) != len(r.images[1])


def concat_refiners(r1: RefinerPair, r2: RefinerPair) -> RefinerPair:
    """(f || g, s || t), a refiner for the intersection of the two targets"""
    if r1.degree != r2.degree:
        raise DegreeMismatch(f"refiners on {r1.degree} and {r2.degree} points")
    if r1.kind != r2.kind:
        raise KindMismatch(f"refiners of kinds {r1.kind.value} and {r2.kind.value}")
    name = f"({r1.name} || {r2.name})"
    target = r1.target.intersection(r2.target)
    perfect = r1.perfect and r2.perfect
    if r1.images is not None and r2.images is not None:
        if _lengths_disagree(r1) or _lengths_disagree(r2):
            # Unequal component lengths could cancel in the sum; keep them apart.
            logger.debug(f"Component images of {name} differ in length, refiner is empty")
            return mismatch_refiner(r1.kind, r1.degree, target, name, perfect)
        a = stack_concat(r1.images[0], r2.images[0])
        b = stack_concat(r1.images[1], r2.images[1])
        return replace(constant_refiner(a, b, target, name, perfect), kind=r1.kind)

    def left(s: Stack) -> Stack:
        return stack_concat(r1.left(s), r2.left(s))

    def right(t: Stack) -> Stack:
        return stack_concat(r1.right(t), r2.right(t))

    return RefinerPair(name, r1.kind, r1.degree, left, right, target, perfect)


def list_refiner(refiners: Sequence[RefinerPair]) -> RefinerPair:
    """Fold of ``concat_refiners`` over the list"""
    if not refiners:
        raise RefineryError("list_refiner needs at least one refiner")
    return reduce(concat_refiners, refiners)


def lift_refiner(r: RefinerPair, kind: StackKind) -> RefinerPair:
    """Re-express a constant refiner's images in a richer stack kind"""
    kind = StackKind(kind)
    if r.kind == kind:
        return r
    if r.images is None:
        raise KindMismatch("only constant refiners can be lifted")
    a, b = (lift(s, kind) for s in r.images)
    return replace(constant_refiner(a, b, r.target, r.name, r.perfect), kind=kind)
