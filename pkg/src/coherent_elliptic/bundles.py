"""Formal vector bundles on an elliptic curve.

Every bundle on an elliptic curve splits uniquely (up to order) into
indecomposable summands, and the indecomposables of given rank and degree
are parametrised by the curve itself. A summand is therefore modelled as
``(rank, degree, twist)`` where ``twist`` is an opaque label standing for the
parametrising point. Only label equality ever matters.

For degree-0 summands the reserved label ``"trivial"`` marks the bundle
``F_r`` (iterated non-split extension of O by itself), which has exactly one
section; any other label marks ``F_r (x) L`` with ``L`` non-trivial of degree
0, which has none.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

TRIVIAL = "trivial"


@dataclass(frozen=True, order=True)
class Summand:
    rank: int
    degree: int
    twist: str = "p0"

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"summand rank must be >= 1, got {self.rank}")

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)

    def to_json(self) -> dict:
        return {"rank": self.rank, "degree": self.degree, "twist": self.twist}


@dataclass(frozen=True)
class Bundle:
    """A direct sum of indecomposable summands (a multiset; order is irrelevant)."""

    summands: tuple[Summand, ...]

    def __init__(self, summands: Iterable[Summand]) -> None:
        items = tuple(sorted(summands))
        if not items:
            raise ValueError("a bundle needs at least one summand")
        object.__setattr__(self, "summands", items)

    @classmethod
    def of(cls, *triples: tuple[int, int, str]) -> "Bundle":
        return cls(Summand(*t) for t in triples)

    @property
    def rank(self) -> int:
        return sum(s.rank for s in self.summands)

    @property
    def degree(self) -> int:
        return sum(s.degree for s in self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def to_json(self) -> dict:
        return {"summands": [s.to_json() for s in self.summands]}

    @classmethod
    def from_json(cls, data: dict) -> "Bundle":
        return cls(Summand(int(s["rank"]), int(s["degree"]), str(s["twist"])) for s in data["summands"])


@dataclass(frozen=True)
class AutDimStatus:
    lower_bound: int
    minimal: bool


def h0_indecomposable(s: Summand) -> int:
    if s.degree > 0:
        return s.degree
    if s.degree == 0:
        return 1 if s.twist == TRIVIAL else 0
    return 0


def h1_indecomposable(s: Summand) -> int:
    # Riemann-Roch on a genus one curve: h0 - h1 = degree.
    if s.degree > 0:
        return 0
    if s.degree == 0:
        return h0_indecomposable(s)
    return -s.degree


def h0_bundle(E: Bundle) -> int:
    return sum(h0_indecomposable(s) for s in E.summands)


def h1_bundle(E: Bundle) -> int:
    return sum(h1_indecomposable(s) for s in E.summands)


def slope(E: Bundle) -> Fraction:
    return Fraction(E.degree, E.rank)


def is_semistable(E: Bundle) -> bool:
    """Indecomposables are semistable, so a sum is semistable iff all slopes agree."""
    return len({s.slope for s in E.summands}) == 1


def is_stable(E: Bundle) -> bool:
    if len(E) != 1:
        return False
    s = E.summands[0]
    return math.gcd(s.rank, s.degree) == 1


def is_polystable(E: Bundle) -> bool:
    return is_semistable(E) and all(math.gcd(s.rank, s.degree) == 1 for s in E.summands)


def aut_dim_status(E: Bundle) -> AutDimStatus:
    """Lower bound ``l`` (number of summands) for dim Aut(E), and whether it is attained.

    The bound is attained exactly when E is polystable with pairwise
    non-isomorphic summands. Exact automorphism dimensions beyond that are
    not computed.
    """
    distinct = max(Counter(E.summands).values()) == 1
    return AutDimStatus(lower_bound=len(E), minimal=is_polystable(E) and distinct)


def is_globally_generated(s: Summand) -> Optional[bool]:
    """Tri-state: True if degree > rank, False if there are no sections, None otherwise."""
    if s.degree > s.rank:
        return True
    if s.degree <= 0:
        return False
    return None


def generic_polystable(n: int, d: int) -> Bundle:
    """The general semistable bundle of rank ``n``, degree ``d``.

    It is a sum of ``h = gcd(n, d)`` stable summands of type ``(n/h, d/h)``
    with pairwise distinct twists (``h = n`` when ``d = 0``).
    """
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    h = math.gcd(n, d)
    return Bundle(Summand(n // h, d // h, f"p{i}") for i in range(h))
