from pydantic import BaseModel, Field
from typing import List, Optional

from .search import SearchRequest


class CheckRequest(SearchRequest):
    transport: bool = False
    samples: Optional[int] = Field(default=None, ge=1)
    seed: Optional[int] = None


class ReportResponse(BaseModel):
    check: str
    passed: bool
    lines: List[str]


class CheckResponse(BaseModel):
    refiner: str
    perfect: bool
    reports: List[ReportResponse]


class EncodeResponse(BaseModel):
    kind: str
    length: int
    entries: List[str]
    perfect: bool


class OracleRequest(SearchRequest):
    transport: bool = False
