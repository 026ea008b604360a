"""Exact, sample-driven certification of refiners.

Each sample draws a pair of stacks of equal length and compares the sets
involved by enumerating Sym(n) with the oracle.
"""
import logging
import random
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from .framework import RefinerPair
from .sampling import random_stack
from ..config import settings
from ..models import SubsetShape
from ..objects.stacks import Stack
from ..oracle.brute import OracleConfig, symmetric_group
from ..perms.actions import act, maps_to
from ..perms.permutation import Permutation, compose

logger = logging.getLogger(__name__)


@dataclass
class Violation:
    sample: int
    lhs: int
    rhs: int
    witness: Permutation


@dataclass
class CheckReport:
    refiner: str
    check: str
    samples: int
    violations: List[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def lines(self) -> List[str]:
        if self.passed:
            return ["PASS"]
        result = []
        for v in self.violations:
            result.append(f"FAIL sample={v.sample} |lhs|={v.lhs} |rhs|={v.rhs}")
            result.append(f"witness={v.witness}")
        return result


def _draw_pair(
    r: RefinerPair, k: int, rng: random.Random, target: Sequence[Permutation], max_length: int, config: OracleConfig
) -> Tuple[Stack, Stack]:
    """Stacks of equal length; most pairs are related by a target or random element"""
    n = r.degree
    length = rng.randint(0, max_length)
    s = random_stack(r.kind, n, rng, length=length)
    mode = k % 3
    if mode == 0 and target:
        return s, act(rng.choice(target), s)
    if mode in (0, 1):
        return s, act(rng.choice(symmetric_group(n, config)), s)
    return s, random_stack(r.kind, n, rng, length=length)


def _prepare(r: RefinerPair, config: Optional[OracleConfig]):
    config = config or OracleConfig()
    symmetric_group(r.degree, config)
    return config, r.target.elements(config=config)


def check_sound(
    r: RefinerPair,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    config: Optional[OracleConfig] = None,
) -> CheckReport:
    """Every target element mapping S to T must map f_L(S) to f_R(T)"""
    samples = settings.check_samples if samples is None else samples
    config, target = _prepare(r, config)
    rng = random.Random(config.seed if seed is None else seed)
    report = CheckReport(r.name, "sound", samples)
    for k in range(samples):
        s, t = _draw_pair(r, k, rng, target, settings.check_max_stack_length, config)
        lhs = [g for g in target if maps_to(g, s, t)]
        fs, ft = r.left(s), r.right(t)
        kept = [g for g in lhs if maps_to(g, fs, ft)]
        if len(kept) != len(lhs):
            witness = next(g for g in lhs if not maps_to(g, fs, ft))
            report.violations.append(Violation(k, len(lhs), len(kept), witness))
    logger.info(f"Soundness of {r.name}: {'PASS' if report.passed else 'FAIL'} over {samples} samples")
    return report


def check_perfect(
    r: RefinerPair,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    config: Optional[OracleConfig] = None,
) -> CheckReport:
    """U meet Iso(S, T) must equal Iso(S || f_L(S), T || f_R(T)); sample 0 uses empty stacks"""
    samples = settings.check_samples if samples is None else samples
    config, target = _prepare(r, config)
    rng = random.Random(config.seed if seed is None else seed)
    sym = symmetric_group(r.degree, config)
    report = CheckReport(r.name, "perfect", samples)
    for k in range(samples):
        if k == 0:
            s = t = Stack.empty(r.kind, r.degree)
        else:
            s, t = _draw_pair(r, k, rng, target, settings.check_max_stack_length, config)
        lhs = {g for g in target if maps_to(g, s, t)}
        s2, t2 = r.apply(s, t)
        rhs = {g for g in sym if maps_to(g, s2, t2)}
        if lhs != rhs:
            witness = min(lhs ^ rhs)
            report.violations.append(Violation(k, len(lhs), len(rhs), witness))
    logger.info(f"Perfectness of {r.name}: {'PASS' if report.passed else 'FAIL'} over {samples} samples")
    return report


def _is_subgroup(elements: Set[Permutation], degree: int) -> bool:
    if Permutation.identity(degree) not in elements:
        return False
    return all(compose(a, b) in elements for a in elements for b in elements)


def classify_subset(elements: Iterable[Permutation], degree: int) -> SubsetShape:
    """Whether an explicit subset of Sym(n) is empty, a subgroup, a right coset, or neither"""
    elements = set(elements)
    if not elements:
        return SubsetShape.EMPTY
    if _is_subgroup(elements, degree):
        return SubsetShape.SUBGROUP
    back = min(elements).inverse()
    if _is_subgroup({compose(e, back) for e in elements}, degree):
        return SubsetShape.COSET
    return SubsetShape.OTHER
