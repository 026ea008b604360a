"""Extended graphs: orbits of Sym(V minus Omega) on labelled digraphs on V.

An extended graph is stored by one representative. Two extended graphs are
equal when some renaming of the extra vertices maps one representative onto
the other, so ``==`` and ``hash`` are orbit-level.
"""
import itertools
import logging
from collections import defaultdict
from typing import FrozenSet, Optional

from .digraphs import LabelledDigraph
from ..errors import RefineryError
from ..perms.permutation import Domain

logger = logging.getLogger(__name__)

BRUTE_FORCE_EXTRA_LIMIT = 6


class ExtendedGraph:
    __slots__ = ("_n", "_representative", "_fingerprint")

    def __init__(self, n: int, representative: LabelledDigraph):
        self._n = n
        self._representative = representative
        self._fingerprint: Optional[tuple] = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def omega(self) -> Domain:
        return Domain(self._n)

    @property
    def representative(self) -> LabelledDigraph:
        return self._representative

    @property
    def extra(self) -> FrozenSet[int]:
        return frozenset(v for v in self._representative.vertices if v > self._n)

    def normalised(self, offset: Optional[int] = None) -> LabelledDigraph:
        """Representative with extra vertices renamed ascending from ``offset + 1``"""
        start = self._n if offset is None else offset
        mapping = {v: start + i for i, v in enumerate(sorted(self.extra), start=1)}
        return self._representative.relabel(mapping)

    def fingerprint(self) -> tuple:
        """Invariant of the orbit; equal extended graphs have equal fingerprints"""
        if self._fingerprint is None:
            self._fingerprint = _fingerprint(self._n, self._representative)
        return self._fingerprint

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtendedGraph):
            return NotImplemented
        return extended_equal(self, other)

    def __hash__(self) -> int:
        return hash(self.fingerprint())

    def __repr__(self) -> str:
        rep = self._representative
        return f"ExtendedGraph(n={self._n}, extra={sorted(self.extra)}, arcs={len(rep.arcs)})"


def _fingerprint(n: int, rep: LabelledDigraph) -> tuple:
    out, inn = defaultdict(list), defaultdict(list)
    for a, b in rep.arcs:
        out[a].append(b)
        inn[b].append(a)

    def vlabel(v):
        return rep.vertex_label(v) or ""

    def alabel(a, b):
        return rep.arc_label((a, b)) or ""

    extras = sorted(v for v in rep.vertices if v > n)
    extra_sig = {}
    for e in extras:
        extra_sig[e] = (
            vlabel(e),
            tuple(sorted((alabel(e, w), w if w <= n else 0) for w in out[e])),
            tuple(sorted((alabel(u, e), u if u <= n else 0) for u in inn[e])),
        )

    def neighbour(w):
        return (0, w, ()) if w <= n else (1, 0, extra_sig[w])

    omega_part = tuple(
        (
            v,
            vlabel(v),
            tuple(sorted((alabel(v, w),) + neighbour(w) for w in out[v])),
            tuple(sorted((alabel(u, v),) + neighbour(u) for u in inn[v])),
        )
        for v in range(1, n + 1)
    )
    return (n, len(extras), omega_part, tuple(sorted(extra_sig.values())))


def extended_equal(a: ExtendedGraph, b: ExtendedGraph) -> bool:
    """True iff a renaming of extra vertices maps one representative onto the other"""
    if a.n != b.n or len(a.extra) != len(b.extra):
        return False
    if a.representative == b.representative:
        return True
    if a.fingerprint() != b.fingerprint():
        return False
    from ..search.engine import pinned_transporter_exists

    logger.debug(f"Searching for an extra-vertex renaming ({len(a.extra)} extra vertices)")
    return pinned_transporter_exists(a.normalised(), b.normalised(), a.n)


def extended_equal_brute(a: ExtendedGraph, b: ExtendedGraph) -> bool:
    """Try every bijection between the extra vertex sets"""
    if a.n != b.n or len(a.extra) != len(b.extra):
        return False
    if len(a.extra) > BRUTE_FORCE_EXTRA_LIMIT:
        raise RefineryError(f"brute force limited to {BRUTE_FORCE_EXTRA_LIMIT} extra vertices")
    source = sorted(a.extra)
    target = b.representative
    for images in itertools.permutations(sorted(b.extra)):
        if a.representative.relabel(dict(zip(source, images))) == target:
            return True
    return False
