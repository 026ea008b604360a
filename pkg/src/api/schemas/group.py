from pydantic import BaseModel, Field
from typing import List, Optional

from .search import CosetResponse


class GroupRequest(BaseModel):
    degree: int = Field(ge=1)
    gens: List[str]
    cap: Optional[int] = Field(default=None, ge=1)


class ConjugacyRequest(GroupRequest):
    to_gens: List[str]


class GroupResponse(CosetResponse):
    exact: bool = True
    nodes: int


class TwoClosedResponse(BaseModel):
    two_closed: bool
    order: int
    closure_order: int
