"""Seeded random objects for refiner checks and sweeps."""
import random
from typing import Any, FrozenSet, Optional

from ..encoders.extended_encoders import encode_set_of_lists, encode_set_of_sets
from ..errors import UnsupportedQuery
from ..models import SourceKind, StackKind
from ..objects.digraphs import Digraph, Graph, LabelledDigraph
from ..objects.partitions import OrderedPartition
from ..objects.stacks import Stack
from ..perms.permutation import Permutation

LABELS = ("x", "y")


def random_permutation(n: int, rng: random.Random) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def random_subset(n: int, rng: random.Random, size: Optional[int] = None) -> FrozenSet[int]:
    if size is None:
        return frozenset(p for p in range(1, n + 1) if rng.random() < 0.5)
    return frozenset(rng.sample(range(1, n + 1), size))


def random_partition(n: int, rng: random.Random) -> OrderedPartition:
    points = list(range(1, n + 1))
    rng.shuffle(points)
    cuts = sorted(rng.sample(range(1, n), rng.randint(0, n - 1))) if n > 1 else []
    bounds = [0] + cuts + [n]
    return OrderedPartition(tuple(frozenset(points[a:b]) for a, b in zip(bounds, bounds[1:])))


def random_blocks(n: int, rng: random.Random, covering: bool) -> FrozenSet[FrozenSet[int]]:
    """Nonempty disjoint blocks, covering {1..n} when asked"""
    cells = random_partition(n, rng).cells
    if not covering:
        cells = [c for c in cells if rng.random() < 0.7]
    return frozenset(cells)


def random_labelled_digraph(n: int, rng: random.Random, density: float = 0.3) -> LabelledDigraph:
    arcs = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if rng.random() < density]
    return LabelledDigraph(
        range(1, n + 1),
        arcs,
        {v: rng.choice(LABELS) for v in range(1, n + 1)},
        {arc: rng.choice(LABELS) for arc in arcs},
    )


def random_list(n: int, rng: random.Random, max_length: int = 3) -> tuple:
    return tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_length)))


def random_entry(kind: StackKind, n: int, rng: random.Random) -> Any:
    kind = StackKind(kind)
    if kind == StackKind.POINT:
        return rng.randint(1, n)
    if kind == StackKind.PARTITION:
        return random_partition(n, rng)
    if kind == StackKind.DIGRAPH:
        return random_labelled_digraph(n, rng)
    if rng.random() < 0.5:
        return encode_set_of_sets({random_subset(n, rng) for _ in range(rng.randint(0, 3))}, n)
    return encode_set_of_lists({random_list(n, rng) for _ in range(rng.randint(0, 2))}, n)


def random_stack(kind: StackKind, n: int, rng: random.Random, max_length: int = 3, length: Optional[int] = None) -> Stack:
    length = rng.randint(0, max_length) if length is None else length
    return Stack(kind, n, [random_entry(kind, n, rng) for _ in range(length)])


def random_source(kind: SourceKind, n: int, rng: random.Random) -> Any:
    """A random object of a query's source kind"""
    kind = SourceKind(kind)
    if kind == SourceKind.POINT:
        return rng.randint(1, n)
    if kind == SourceKind.POINT_LIST:
        return random_list(n, rng)
    if kind == SourceKind.SUBSET:
        return random_subset(n, rng)
    if kind == SourceKind.ORDERED_PARTITION:
        return random_partition(n, rng)
    if kind == SourceKind.DISTINCT_SIZES:
        sizes = rng.sample(range(0, n + 1), rng.randint(0, min(3, n + 1)))
        return frozenset(random_subset(n, rng, size) for size in sizes)
    if kind == SourceKind.LIST:
        return (random_subset(n, rng), rng.randint(1, n))
    if kind == SourceKind.GRAPH:
        pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
        return Graph(n, frozenset(frozenset(p) for p in pairs if rng.random() < 0.4))
    if kind == SourceKind.DIGRAPH:
        return Digraph(n, frozenset((a, b) for a in range(1, n + 1) for b in range(1, n + 1) if rng.random() < 0.3))
    if kind == SourceKind.LABELLED_DIGRAPH:
        return random_labelled_digraph(n, rng)
    if kind == SourceKind.DISJOINT_SETS:
        return random_blocks(n, rng, covering=False)
    if kind == SourceKind.UNORDERED_PARTITION:
        return random_blocks(n, rng, covering=True)
    if kind == SourceKind.PERM_CONJ:
        return random_permutation(n, rng)
    if kind == SourceKind.PERM_LIST:
        return tuple(random_permutation(n, rng) for _ in range(rng.randint(1, 2)))
    if kind == SourceKind.SET_OF_SETS:
        return frozenset(random_subset(n, rng) for _ in range(rng.randint(0, 3)))
    if kind == SourceKind.SET_OF_LISTS:
        return frozenset(random_list(n, rng) for _ in range(rng.randint(0, 3)))
    if kind == SourceKind.SET_OF_DIGRAPHS:
        return frozenset(random_labelled_digraph(n, rng, 0.25) for _ in range(rng.randint(1, 2)))
    if kind == SourceKind.SET_OF_STACKS:
        return frozenset(random_stack(StackKind.DIGRAPH, n, rng, max_length=2) for _ in range(rng.randint(1, 2)))
    if kind == SourceKind.GROUP:
        return tuple(random_permutation(n, rng) for _ in range(rng.randint(1, 2)))
    raise UnsupportedQuery(f"no sampler for {kind.value}")

