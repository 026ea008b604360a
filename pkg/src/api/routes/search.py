import logging
from typing import List

from fastapi import APIRouter, HTTPException

from ..schemas.search import BenchmarkRowResponse, IntersectRequest, SearchRequest, SearchResponse
from ...encoders.factory import refiner_for
from ...search.benchmark import run_benchmark
from ...search.engine import SolveResult
from ...search.intersection import intersect
from ...search.queries import solve_query

logger = logging.getLogger(__name__)

router = APIRouter()


def _response(result: SolveResult, perfect=None) -> SearchResponse:
    order = None if result.empty or not result.exact else result.order()
    return SearchResponse.from_coset(
        result.coset,
        order,
        nodes=result.tree_nodes,
        perfect=perfect,
        exact=result.exact,
        refiner_applications=result.refiner_applications,
    )


def _solve(request: SearchRequest, transport: bool) -> SearchResponse:
    try:
        q = request.to_query(request.degree, transport)
        return _response(solve_query(q), refiner_for(q).perfect)
    except ValueError as e:
        logger.error(f"Search failed: {e}")
        raise HTTPException(status_code=400, detail=str(e))


@router.post("/stabiliser", response_model=SearchResponse)
def stabiliser(request: SearchRequest):
    return _solve(request, transport=False)


@router.post("/transporter", response_model=SearchResponse)
def transporter(request: SearchRequest):
    return _solve(request, transport=True)


@router.post("/intersect", response_model=SearchResponse)
def intersect_queries(request: IntersectRequest):
    try:
        refiners = [
            refiner_for(spec.to_query(request.degree, spec.target is not None or bool(spec.to_gens)))
            for spec in request.queries
        ]
        result = intersect(refiners, request.degree, request.apply_refiners)
    except ValueError as e:
        logger.error(f"Intersection failed: {e}")
        raise HTTPException(status_code=400, detail=str(e))
    return _response(result, all(r.perfect for r in refiners))


@router.get("/benchmark", response_model=List[BenchmarkRowResponse])
def benchmark():
    try:
        rows = run_benchmark()
    except (ValueError, OSError) as e:
        logger.error(f"Benchmark failed: {e}")
        raise HTTPException(status_code=500, detail=str(e))
    return [BenchmarkRowResponse(**row.model_dump()) for row in rows]
