"""Stabiliser and transporter queries for a single object.

Perfect encodings are answered by the transporter of the encoded stacks.
For the rest that transporter is only an overgroup coset, so its elements
are filtered against the refiner's target; past the enumeration cap the
overgroup is returned and marked inexact.
"""
import logging
from dataclasses import replace
from typing import Optional

from .engine import SolveResult, solve
from ..config import settings
from ..encoders.factory import Query, refiner_for
from ..errors import GroupOverflow
from ..perms.groups import coset_from_elements
from ..refiners.framework import RefinerPair

logger = logging.getLogger(__name__)


def _filter_to_target(result: SolveResult, r: RefinerPair, degree: int, cap: int) -> SolveResult:
    try:
        elements = result.coset.elements(cap)
    except GroupOverflow:
        logger.warning(f"Encoding transporter of {r.name} exceeds {cap} elements, returning it unfiltered")
        return replace(result, exact=False)
    kept = [g for g in elements if r.target.contains(g, cap)]
    logger.debug(f"Kept {len(kept)} of {len(elements)} elements for {r.name}")
    return SolveResult(coset_from_elements(kept, degree, cap), result.tree_nodes)


def solve_query(q: Query, cap: Optional[int] = None) -> SolveResult:
    """Encode the query's objects and search the transporter of the encodings"""
    r = refiner_for(q)
    a, b = r.images
    result = solve(a, b)
    if not r.perfect and not result.empty:
        result = _filter_to_target(result, r, q.degree, settings.enumeration_cap if cap is None else cap)
    logger.info(
        f"{q.verb.value} of {q.kind.value} on {q.degree} points: "
        f"{'empty' if result.empty else 'nonempty'}, {result.tree_nodes} nodes, exact={result.exact}"
    )
    return result
