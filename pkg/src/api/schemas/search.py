from pydantic import BaseModel, Field
from typing import Any, List, Optional

from ...encoders.factory import Query
from ...models import QueryVerb, SourceKind
from ...objects.literals import FILE_ONLY, objects_from_text, parse_literal
from ...perms.groups import GroupCoset
from ...perms.permutation import parse_perm


class ObjectSpec(BaseModel):
    """One query: literals for small objects, text-format documents for digraphs"""

    kind: SourceKind
    source: Optional[str] = None
    target: Optional[str] = None
    gens: List[str] = []
    to_gens: List[str] = []

    def _side(self, literal: Optional[str], gens: List[str], degree: int) -> Any:
        if self.kind == SourceKind.GROUP:
            return tuple(parse_perm(g, degree) for g in gens)
        if literal is None:
            return None
        if self.kind in FILE_ONLY:
            return objects_from_text([literal], self.kind, degree)
        return parse_literal(literal, self.kind, degree)

    def to_query(self, degree: int, transport: bool) -> Query:
        source = self._side(self.source, self.gens, degree)
        if source is None or (self.kind == SourceKind.GROUP and not self.gens):
            raise ValueError("the query needs a source object")
        if not transport:
            return Query(QueryVerb.STABILISER, self.kind, degree, source)
        target = self._side(self.target, self.to_gens, degree)
        if target is None or (self.kind == SourceKind.GROUP and not self.to_gens):
            raise ValueError("a transporter query needs a target object")
        return Query(QueryVerb.TRANSPORTER, self.kind, degree, source, target)


class SearchRequest(ObjectSpec):
    degree: int = Field(ge=1)


class IntersectRequest(BaseModel):
    degree: int = Field(ge=1)
    queries: List[ObjectSpec]
    apply_refiners: bool = True


class CosetResponse(BaseModel):
    empty: bool
    representative: Optional[str] = None
    generators: List[str] = []
    order: Optional[int] = None

    @classmethod
    def from_coset(cls, coset: GroupCoset, order: Optional[int] = None, **extra) -> "CosetResponse":
        if coset.empty:
            return cls(empty=True, **extra)
        rep = coset.representative
        return cls(
            empty=False,
            representative=str(rep) if rep is not None and not rep.is_identity() else None,
            generators=[str(g) for g in coset.generators],
            order=order,
            **extra,
        )


class SearchResponse(CosetResponse):
    nodes: int
    perfect: Optional[bool] = None
    exact: bool = True
    refiner_applications: int = 0


class BenchmarkRowResponse(BaseModel):
    name: str
    degree: int
    plain_nodes: int
    refined_nodes: int
    perfect: bool
    order: int
    refiner_applications: int = 0
