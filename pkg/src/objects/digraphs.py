from dataclasses import dataclass
from types import MappingProxyType
from typing import FrozenSet, Iterable, Mapping, Optional, Tuple

Arc = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Undirected graph on {1..n}; edges are 2-subsets"""

    n: int
    edges: FrozenSet[FrozenSet[int]] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(frozenset(e) for e in self.edges))


@dataclass(frozen=True)
class Digraph:
    """Unlabelled digraph on {1..n}; loops allowed"""

    n: int
    arcs: FrozenSet[Arc] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "arcs", frozenset(tuple(a) for a in self.arcs))


class LabelledDigraph:
    """Digraph with one label on every vertex and every arc"""

    __slots__ = ("_vertices", "_arcs", "_vertex_labels", "_arc_labels", "_key")

    def __init__(
        self,
        vertices: Iterable[int],
        arcs: Iterable[Arc],
        vertex_labels: Mapping[int, str],
        arc_labels: Mapping[Arc, str],
    ):
        self._vertices = frozenset(vertices)
        self._arcs = frozenset(tuple(a) for a in arcs)
        self._vertex_labels = MappingProxyType(dict(vertex_labels))
        self._arc_labels = MappingProxyType({tuple(a): l for a, l in arc_labels.items()})
        self._key = (
            tuple(sorted(self._vertices)),
            tuple(sorted(self._arcs)),
            tuple(sorted(self._vertex_labels.items())),
            tuple(sorted(self._arc_labels.items())),
        )

    @classmethod
    def uniform(cls, vertices: Iterable[int], arcs: Iterable[Arc], label: str) -> "LabelledDigraph":
        vertices = frozenset(vertices)
        arcs = frozenset(tuple(a) for a in arcs)
        return cls(vertices, arcs, {v: label for v in vertices}, {a: label for a in arcs})

    @property
    def vertices(self) -> FrozenSet[int]:
        return self._vertices

    @property
    def arcs(self) -> FrozenSet[Arc]:
        return self._arcs

    @property
    def vertex_labels(self) -> Mapping[int, str]:
        return self._vertex_labels

    @property
    def arc_labels(self) -> Mapping[Arc, str]:
        return self._arc_labels

    def vertex_label(self, vertex: int) -> Optional[str]:
        return self._vertex_labels.get(vertex)

    def arc_label(self, arc: Arc) -> Optional[str]:
        return self._arc_labels.get(tuple(arc))

    def relabel(self, mapping: Mapping[int, int]) -> "LabelledDigraph":
        """Rename vertices; labels travel with their vertices and arcs"""
        def image(v: int) -> int:
            return mapping.get(v, v)

        return LabelledDigraph(
            (image(v) for v in self._vertices),
            ((image(a), image(b)) for a, b in self._arcs),
            {image(v): l for v, l in self._vertex_labels.items()},
            {(image(a), image(b)): l for (a, b), l in self._arc_labels.items()},
        )

    def sort_key(self) -> tuple:
        return self._key

    def to_networkx(self):
        """Export as a ``networkx.DiGraph`` with ``label`` attributes"""
        import networkx as nx

        graph = nx.DiGraph()
        for v in sorted(self._vertices):
            graph.add_node(v, label=self._vertex_labels.get(v))
        for arc in sorted(self._arcs):
            graph.add_edge(*arc, label=self._arc_labels.get(arc))
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabelledDigraph):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"LabelledDigraph(vertices={len(self._vertices)}, arcs={sorted(self._arcs)})"
