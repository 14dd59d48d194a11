"""Non-emptiness, dimension, alpha-range and generic shape of G(alpha; n, d, k).

These are closed-form decisions: every moduli space of alpha-stable coherent
systems on an elliptic curve that is non-empty is smooth and irreducible of
dimension ``k(d-k)+1``, and non-emptiness is decided by a single strict
inequality in alpha plus an arithmetic condition on ``(n, d, k)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .arith import INF, ExtendedRational, format_rational


class EmptyModuliError(ValueError):
    pass


@dataclass(frozen=True)
class ModuliQuery:
    n: int
    d: int
    k: int
    alpha: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"rank n must be >= 1, got {self.n}")
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")
        if self.alpha is not None and not isinstance(self.alpha, Fraction):
            object.__setattr__(self, "alpha", Fraction(self.alpha))


@dataclass(frozen=True)
class AlphaInterval:
    """The open set of alpha for which the moduli space is non-empty.

    Three forms: empty, "all alpha" (k = 0, alpha plays no role), or the open
    interval ``(0, sup)`` with ``sup`` possibly :data:`INF`.
    """

    empty: bool
    all_alpha: bool = False
    inf: Fraction = Fraction(0)
    sup: ExtendedRational = INF

    def __contains__(self, alpha: object) -> bool:
        if self.empty:
            return False
        if self.all_alpha:
            return True
        return self.inf < alpha < self.sup  # type: ignore[operator]

    def to_json(self) -> dict:
        if self.empty:
            return {"empty": True}
        if self.all_alpha:
            return {"all": True}
        return {"inf": format_rational(self.inf), "sup": format_rational(self.sup), "open": True}

    def __str__(self) -> str:
        if self.empty:
            return "empty"
        if self.all_alpha:
            return "all alpha"
        return f"({format_rational(self.inf)}, {format_rational(self.sup)})"


EMPTY = AlphaInterval(empty=True)
ALL_ALPHA = AlphaInterval(empty=False, all_alpha=True)


@dataclass(frozen=True)
class StableBundleNoSections:
    def to_json(self) -> dict:
        return {"variant": "StableBundleNoSections"}


@dataclass(frozen=True)
class LineBundleSystem:
    def to_json(self) -> dict:
        return {"variant": "LineBundleSystem"}


@dataclass(frozen=True)
class ExtensionByTrivial:
    """``0 -> O^k -> E -> G -> 0`` with ``V = H^0(O^k)`` and ``G`` polystable."""

    k: int
    quotient_rank: int
    quotient_degree: int

    def to_json(self) -> dict:
        return {
            "variant": "ExtensionByTrivial",
            "k": self.k,
            "quotient_rank": self.quotient_rank,
            "quotient_degree": self.quotient_degree,
        }


@dataclass(frozen=True)
class TorsionQuotient:
    """``0 -> O^n -> E -> T -> 0`` with ``T`` torsion of the given length."""

    length: int

    def to_json(self) -> dict:
        return {"variant": "TorsionQuotient", "length": self.length}


@dataclass(frozen=True)
class KernelPresentation:
    """``0 -> H -> O^k -> E -> 0`` with ``H`` polystable, distinct summands."""

    kernel_rank: int
    kernel_degree: int

    def to_json(self) -> dict:
        return {
            "variant": "KernelPresentation",
            "kernel_rank": self.kernel_rank,
            "kernel_degree": self.kernel_degree,
        }


GenericShape = Union[
    StableBundleNoSections, LineBundleSystem, ExtensionByTrivial, TorsionQuotient, KernelPresentation
]


def brill_noether(d: int, k: int) -> int:
    """Expected dimension ``k(d-k)+1``; on an elliptic curve it does not involve the rank."""
    return k * (d - k) + 1


def _arithmetic_condition(n: int, d: int, k: int) -> bool:
    # The alpha-free half of the non-emptiness criterion, for k >= 1.
    if n == 1:
        return (d == 0 and k == 1) or k <= d
    return k < d or (k == d and math.gcd(n, d) == 1)


def is_nonempty(q: ModuliQuery) -> bool:
    n, d, k, alpha = q.n, q.d, q.k, q.alpha
    if k == 0:
        return math.gcd(n, d) == 1
    if alpha is None:
        raise ValueError("alpha required when k >= 1")
    if alpha <= 0:
        return False
    if n == 1:
        return _arithmetic_condition(n, d, k)
    return (n - k) * alpha < d and _arithmetic_condition(n, d, k)


def alpha_range(n: int, d: int, k: int) -> AlphaInterval:
    if n < 1 or k < 0:
        raise ValueError(f"invalid type (n={n}, d={d}, k={k})")
    if k == 0:
        return ALL_ALPHA if math.gcd(n, d) == 1 else EMPTY
    if not _arithmetic_condition(n, d, k):
        return EMPTY
    if k >= n:
        return AlphaInterval(empty=False, sup=INF)
    sup = Fraction(d, n - k)
    if sup <= 0:
        return EMPTY
    return AlphaInterval(empty=False, sup=sup)


def moduli_dimension(q: ModuliQuery) -> int:
    if not is_nonempty(q):
        raise EmptyModuliError("empty moduli space")
    return brill_noether(q.d, q.k)


def generic_shape(q: ModuliQuery) -> GenericShape:
    if not is_nonempty(q):
        raise EmptyModuliError("empty moduli space")
    n, d, k = q.n, q.d, q.k
    if k == 0:
        return StableBundleNoSections()
    if n == 1:
        return LineBundleSystem()
    if k < n:
        return ExtensionByTrivial(k=k, quotient_rank=n - k, quotient_degree=d)
    if k == n:
        return TorsionQuotient(length=d)
    return KernelPresentation(kernel_rank=k - n, kernel_degree=-d)
