"""Exceptions raised across the package.

Every error derives from ``ValueError`` so plain callers can catch that.
"""


class RefineryError(ValueError):
    """Base class for all package errors"""


class InvariantViolation(RefineryError):
    """An object breaks one of its type invariants"""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        self.detail = detail
        message = invariant if not detail else f"{invariant}: {detail}"
        super().__init__(message)


class DegreeMismatch(RefineryError):
    """Permutations or objects live on different domains"""


class KindMismatch(RefineryError):
    """Stacks or queries of incompatible kinds were combined"""


class GroupOverflow(RefineryError):
    """A group enumeration exceeded its cap"""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"group has more than {cap} elements")


class OracleOverflow(RefineryError):
    """The brute-force oracle was asked for a degree above its cap"""

    def __init__(self, degree: int, cap: int):
        self.degree = degree
        self.cap = cap
        super().__init__(f"degree {degree} exceeds oracle cap {cap}")


class ParseError(RefineryError):
    """Malformed cycle notation, literal or object text"""


class UnsupportedQuery(RefineryError):
    """No refiner is known for the requested query"""
