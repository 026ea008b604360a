from typing import Any, Iterable, Iterator, Tuple

from .digraphs import LabelledDigraph
from .extended import ExtendedGraph
from .labels import cell_label, point_label
from .partitions import OrderedPartition
from ..errors import DegreeMismatch, KindMismatch
from ..models import StackKind

_ENTRY_TYPES = {
    StackKind.POINT: int,
    StackKind.PARTITION: OrderedPartition,
    StackKind.DIGRAPH: LabelledDigraph,
    StackKind.EXTENDED: ExtendedGraph,
}


class Stack:
    """A finite list of objects of one kind over {1..n}"""

    __slots__ = ("kind", "n", "entries")

    def __init__(self, kind: StackKind, n: int, entries: Iterable[Any] = ()):
        self.kind = StackKind(kind)
        self.n = n
        self.entries: Tuple[Any, ...] = tuple(entries)

    @classmethod
    def empty(cls, kind: StackKind, n: int) -> "Stack":
        return cls(kind, n, ())

    @property
    def entry_type(self) -> type:
        return _ENTRY_TYPES[self.kind]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> Any:
        return self.entries[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Stack):
            return NotImplemented
        if self.n != other.n or self.entries != other.entries:
            return False
        return self.kind == other.kind or not self.entries

    def __hash__(self) -> int:
        return hash((self.n, self.entries))

    def __repr__(self) -> str:
        return f"Stack({self.kind.value}, n={self.n}, entries={list(self.entries)!r})"


def stack_concat(s: Stack, t: Stack) -> Stack:
    if s.n != t.n:
        raise DegreeMismatch(f"cannot concatenate stacks on {s.n} and {t.n} points")
    if not s.entries:
        return Stack(t.kind, t.n, t.entries)
    if not t.entries:
        return s
    if s.kind != t.kind:
        raise KindMismatch(f"cannot concatenate {s.kind.value} and {t.kind.value} stacks")
    return Stack(s.kind, s.n, s.entries + t.entries)


def _point_to_partition(point: int, n: int) -> OrderedPartition:
    rest = frozenset(range(1, n + 1)) - {point}
    return OrderedPartition((frozenset({point}), rest) if rest else (frozenset({point}),))


def _partition_to_digraph(partition: OrderedPartition, n: int) -> LabelledDigraph:
    labels = {v: cell_label(partition.cell_of(v)) for v in range(1, n + 1)}
    return LabelledDigraph(range(1, n + 1), (), labels, {})


def _lift_entry(entry: Any, source: StackKind, n: int) -> Any:
    if source == StackKind.POINT:
        return _point_to_partition(entry, n)
    if source == StackKind.PARTITION:
        return _partition_to_digraph(entry, n)
    if source == StackKind.DIGRAPH:
        return ExtendedGraph(n, entry)
    raise KindMismatch(f"nothing lies above {source.value}")


def lift(stack: Stack, kind: StackKind) -> Stack:
    """Re-express a stack as a stack of a richer kind, entry by entry"""
    kind = StackKind(kind)
    if kind.rank < stack.kind.rank:
        raise KindMismatch(f"cannot lower {stack.kind.value} to {kind.value}")
    entries, current = stack.entries, stack.kind
    while current != kind:
        entries = tuple(_lift_entry(e, current, stack.n) for e in entries)
        current = list(StackKind)[current.rank + 1]
    return Stack(kind, stack.n, entries)


def trivial_entry(kind: StackKind, n: int) -> Any:
    kind = StackKind(kind)
    if kind == StackKind.POINT:
        return 1
    digraph = LabelledDigraph.uniform(range(1, n + 1), (), point_label(False))
    if kind == StackKind.PARTITION:
        return OrderedPartition((frozenset(range(1, n + 1)),))
    if kind == StackKind.DIGRAPH:
        return digraph
    return ExtendedGraph(n, digraph)
