import random
from pathlib import Path

import pytest
from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup

from src.perms.permutation import parse_perm

ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture
def perm():
    """Parse cycle notation on a given degree"""
    return parse_perm


@pytest.fixture
def gens():
    def build(n, *texts):
        return tuple(parse_perm(t, n) for t in texts)

    return build


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def sympy_order():
    """Order of <gens> computed independently by sympy"""
    def order(generators):
        return PermutationGroup([SymPermutation([i - 1 for i in g.images]) for g in generators]).order()

    return order


@pytest.fixture
def block_group(gens):
    """<(1 2 3)(4 5 6), (1 4)(2 5)>: blocks {1,4},{2,5},{3,6}, not 2-closed"""
    return gens(6, "(1 2 3)(4 5 6)", "(1 4)(2 5)")


@pytest.fixture
def a5_on_six(gens):
    """<(1 2 3)(4 5 6), (1 2)(3 5)>: 2-transitive of order 60"""
    return gens(6, "(1 2 3)(4 5 6)", "(1 2)(3 5)")


@pytest.fixture
def benchmark_file():
    return ROOT / "config" / "benchmark_queries.json"
