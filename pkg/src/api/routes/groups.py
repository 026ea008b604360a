import logging
from typing import List

from fastapi import APIRouter, HTTPException

from ..schemas.group import ConjugacyRequest, GroupRequest, GroupResponse, TwoClosedResponse
from ..schemas.search import CosetResponse
from ...perms.groups import group_order
from ...perms.permutation import Permutation, parse_perm
from ...search.groups import GroupComputation, centraliser, conjugacy_transporter, is_two_closed, normaliser, two_closure_result

logger = logging.getLogger(__name__)

router = APIRouter()


def _gens(texts: List[str], degree: int) -> List[Permutation]:
    try:
        return [parse_perm(t, degree) for t in texts]
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


def _computation(found: GroupComputation) -> GroupResponse:
    order = found.coset.order() if found.exact and not found.empty else None
    return GroupResponse.from_coset(found.coset, order, exact=found.exact, nodes=found.tree_nodes)


@router.post("/two-closure", response_model=GroupResponse)
def two_closure(request: GroupRequest):
    result = two_closure_result(_gens(request.gens, request.degree), request.degree)
    return GroupResponse.from_coset(result.coset, result.order(), exact=True, nodes=result.tree_nodes)


@router.post("/is-two-closed", response_model=TwoClosedResponse)
def two_closed(request: GroupRequest):
    gens = _gens(request.gens, request.degree)
    closure = two_closure_result(gens, request.degree)
    return TwoClosedResponse(
        two_closed=is_two_closed(gens, request.degree),
        order=group_order(gens, degree=request.degree),
        closure_order=closure.order(),
    )


@router.post("/normaliser", response_model=GroupResponse)
def group_normaliser(request: GroupRequest):
    try:
        found = normaliser(_gens(request.gens, request.degree), request.degree, request.cap)
    except ValueError as e:
        logger.error(f"Normaliser failed: {e}")
        raise HTTPException(status_code=400, detail=str(e))
    return _computation(found)


@router.post("/conjugate", response_model=GroupResponse)
def conjugate(request: ConjugacyRequest):
    try:
        found = conjugacy_transporter(
            _gens(request.gens, request.degree), _gens(request.to_gens, request.degree), request.degree, request.cap
        )
    except ValueError as e:
        logger.error(f"Conjugacy failed: {e}")
        raise HTTPException(status_code=400, detail=str(e))
    return _computation(found)


@router.post("/centraliser", response_model=CosetResponse)
def group_centraliser(request: GroupRequest):
    coset = centraliser(_gens(request.gens, request.degree), request.degree)
    return CosetResponse.from_coset(coset, coset.order())
