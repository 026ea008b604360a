import logging

from fastapi import APIRouter, HTTPException

from ..schemas.refiner import CheckRequest, CheckResponse, EncodeResponse, OracleRequest, ReportResponse
from ..schemas.search import CosetResponse, SearchRequest
from ...encoders.factory import encode_source, refiner_for
from ...errors import UnsupportedQuery
from ...models import SourceKind
from ...objects.text_format import dump_object
from ...oracle.brute import brute_transporter
from ...refiners.checks import check_perfect, check_sound

logger = logging.getLogger(__name__)

router = APIRouter()


@router.post("/check", response_model=CheckResponse)
def check_refiner(request: CheckRequest):
    try:
        r = refiner_for(request.to_query(request.degree, request.transport))
        reports = [check_sound(r, request.samples, request.seed)]
        if r.perfect:
            reports.append(check_perfect(r, request.samples, request.seed))
    except ValueError as e:
        logger.error(f"Refiner check failed: {e}")
        raise HTTPException(status_code=400, detail=str(e))
    return CheckResponse(
        refiner=r.name,
        perfect=r.perfect,
        reports=[ReportResponse(check=rep.check, passed=rep.passed, lines=rep.lines()) for rep in reports],
    )


@router.post("/encode", response_model=EncodeResponse)
def encode(request: SearchRequest):
    try:
        q = request.to_query(request.degree, transport=False)
        stack = encode_source(q.kind, q.source, q.degree)
        perfect = refiner_for(q).perfect
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return EncodeResponse(
        kind=stack.kind.value,
        length=len(stack),
        entries=[dump_object(entry, q.degree) for entry in stack.entries],
        perfect=perfect,
    )


@router.post("/oracle", response_model=CosetResponse)
def oracle(request: OracleRequest):
    try:
        q = request.to_query(request.degree, request.transport)
        if q.kind == SourceKind.GROUP:
            raise UnsupportedQuery("the oracle compares objects, use conjugate for groups")
        coset = brute_transporter(q.source, q.image, q.degree)
    except ValueError as e:
        logger.error(f"Oracle failed: {e}")
        raise HTTPException(status_code=400, detail=str(e))
    return CosetResponse.from_coset(coset, None if coset.empty else coset.order())
