"""Brute-force ground truth by enumerating Sym(n).

Elements come out in lexicographic order of their image tables and the full
symmetric group of each degree is built once per process.
"""
import itertools
import logging
import math
import threading
from typing import Any, Callable, Dict, List, Optional, Union

from pydantic import BaseModel, Field, field_validator

from ..config import settings
from ..errors import OracleOverflow
from ..perms.actions import maps_to
from ..perms.groups import GroupCoset, coset_from_elements
from ..perms.permutation import Permutation

logger = logging.getLogger(__name__)

# Largest symmetric group the oracle will hold in memory (10! elements).
MEMORY_BUDGET = math.factorial(10)

_cache: Dict[int, List[Permutation]] = {}
_cache_lock = threading.Lock()


class OracleConfig(BaseModel):
    max_degree: int = Field(default_factory=lambda: settings.oracle_cap)
    seed: int = Field(default_factory=lambda: settings.oracle_seed)

    @field_validator("max_degree")
    @classmethod
    def fits_memory_budget(cls, value: int) -> int:
        if value < 1 or math.factorial(value) > MEMORY_BUDGET:
            raise ValueError(f"max_degree {value} does not fit the enumeration budget")
        return value


def symmetric_group(degree: int, config: Optional[OracleConfig] = None) -> List[Permutation]:
    config = config or OracleConfig()
    if degree > config.max_degree:
        raise OracleOverflow(degree, config.max_degree)
    elements = _cache.get(degree)
    if elements is None:
        with _cache_lock:
            elements = _cache.get(degree)
            if elements is None:
                logger.info(f"Enumerating Sym({degree})")
                elements = [Permutation(p) for p in itertools.permutations(range(1, degree + 1))]
                _cache[degree] = elements
    return elements


def brute_filter(
    pred: Callable[[Permutation], bool], degree: int, config: Optional[OracleConfig] = None
) -> List[Permutation]:
    """Every g in Sym(degree) with pred(g)"""
    return [g for g in symmetric_group(degree, config) if pred(g)]


def brute_transporter(
    x: Any, y: Any, degree: int, explicit: bool = False, config: Optional[OracleConfig] = None
) -> Union[GroupCoset, List[Permutation]]:
    """All g with x^g = y, as a coset or as an explicit element list"""
    elements = brute_filter(lambda g: maps_to(g, x, y), degree, config)
    if explicit:
        return elements
    return coset_from_elements(elements, degree)
