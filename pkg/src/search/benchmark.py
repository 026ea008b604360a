"""Tree sizes of intersection searches with and without root refiners."""
import json
import logging
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field

from .intersection import intersect
from ..config import settings
from ..encoders.factory import Query, refiner_for
from ..models import QueryVerb, SourceKind
from ..objects.literals import parse_literal
from ..refiners.framework import RefinerPair

logger = logging.getLogger(__name__)


class RefinerSpec(BaseModel):
    verb: QueryVerb = QueryVerb.STABILISER
    kind: SourceKind
    source: str
    target: Optional[str] = None

    def build(self, degree: int) -> RefinerPair:
        source = parse_literal(self.source, self.kind, degree)
        target = parse_literal(self.target, self.kind, degree) if self.target is not None else None
        return refiner_for(Query(self.verb, self.kind, degree, source, target))


class BenchmarkQuery(BaseModel):
    name: str
    degree: int = Field(ge=1)
    refiners: List[RefinerSpec]


class BenchmarkRow(BaseModel):
    name: str
    degree: int
    plain_nodes: int
    refined_nodes: int
    perfect: bool
    order: int
    refiner_applications: int = 0

    @property
    def monotone(self) -> bool:
        return self.refined_nodes <= self.plain_nodes


def load_queries(path: Optional[str] = None) -> List[BenchmarkQuery]:
    path = Path(path or settings.benchmark_path)
    with open(path, "r", encoding="utf-8") as f:
        data = json.load(f)
    return [BenchmarkQuery(**q) for q in data.get("queries", [])]


def run_query(query: BenchmarkQuery) -> BenchmarkRow:
    refiners = [spec.build(query.degree) for spec in query.refiners]
    plain = intersect(refiners, query.degree, apply_refiners=False)
    refined = intersect(refiners, query.degree)
    if plain.coset.element_set() != refined.coset.element_set():
        logger.error(f"Benchmark {query.name}: refined and plain searches disagree")
    return BenchmarkRow(
        name=query.name,
        degree=query.degree,
        plain_nodes=plain.tree_nodes,
        refined_nodes=refined.tree_nodes,
        perfect=all(r.perfect for r in refiners),
        order=refined.order(),
        refiner_applications=refined.refiner_applications,
    )


def run_benchmark(path: Optional[str] = None) -> List[BenchmarkRow]:
    """One row per query in the benchmark file"""
    rows = []
    for query in load_queries(path):
        row = run_query(query)
        logger.info(f"{row.name}: {row.plain_nodes} -> {row.refined_nodes} nodes, order {row.order}")
        rows.append(row)
    return rows
