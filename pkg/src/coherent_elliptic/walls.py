"""Critical values of alpha for type (n, d, k) and the flip invariants at each one.

A critical value is induced by a numerical splitting
``(n, d, k) = (n1, d1, k1) + (n2, d2, k2)`` with

    alpha = (n1*d2 - n2*d1) / (n2*k1 - n1*k2),

subject to ``k1/n1 > k2/n2``, ``d1/n1 < d2/n2`` and ``(n - k)*alpha < d``.
A splitting only contributes when both factor moduli spaces are non-empty
just below ``alpha``. Since that forces ``d1, d2 >= 0``, the enumeration
ranges over ``0 <= d1 <= d`` only.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .arith import format_rational
from .moduli import AlphaInterval, alpha_range, brill_noether


@dataclass(frozen=True, order=True)
class WallDecomposition:
    n1: int
    d1: int
    k1: int
    n2: int
    d2: int
    k2: int

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.n1 * self.d2 - self.n2 * self.d1, self.n2 * self.k1 - self.n1 * self.k2)

    @property
    def c12(self) -> int:
        return c12(self)

    @property
    def c21(self) -> int:
        return c21(self)

    def to_json(self) -> dict:
        return {
            "n1": self.n1, "d1": self.d1, "k1": self.k1,
            "n2": self.n2, "d2": self.d2, "k2": self.k2,
            "c12": self.c12, "c21": self.c21,
        }


@dataclass(frozen=True)
class Wall:
    alpha: Fraction
    decompositions: tuple[WallDecomposition, ...]

    @property
    def min_c12(self) -> int:
        return min(dec.c12 for dec in self.decompositions)

    @property
    def min_c21(self) -> int:
        return min(dec.c21 for dec in self.decompositions)

    def flip_dims(self) -> dict[str, int]:
        """Largest modelled flip-locus dimension on each side, over all decompositions."""
        return {
            "minus": max(flip_locus_dim(dec, "minus") for dec in self.decompositions),
            "plus": max(flip_locus_dim(dec, "plus") for dec in self.decompositions),
        }

    def to_json(self) -> dict:
        return {
            "alpha": format_rational(self.alpha),
            "decompositions": [dec.to_json() for dec in self.decompositions],
            "min_c12": self.min_c12,
            "min_c21": self.min_c21,
            "flip_dims": self.flip_dims(),
        }


def c12(dec: WallDecomposition) -> int:
    return -dec.d2 * dec.n1 + dec.d1 * dec.n2 + dec.k1 * dec.d2 - dec.k1 * dec.k2


def c21(dec: WallDecomposition) -> int:
    return -dec.d1 * dec.n2 + dec.d2 * dec.n1 + dec.k2 * dec.d1 - dec.k1 * dec.k2


def flip_locus_dim(dec: WallDecomposition, side: str) -> int:
    """Model dimension of the flip locus G^- (``side="minus"``) or G^+ (``"plus"``).

    G^- is a projectivised Ext^1 of dimension C21 fibred over the product of
    the two factor moduli; G^+ uses C12. This assumes the Hom and Ext^2
    spaces between the factors vanish, which is checked only for the
    ``(2m+1, 2, 2) + (m, 1, 0)`` family; elsewhere it is a model estimate.
    """
    base = brill_noether(dec.d1, dec.k1) + brill_noether(dec.d2, dec.k2)
    if side == "minus":
        return base + dec.c21 - 1
    if side == "plus":
        return base + dec.c12 - 1
    raise ValueError(f"side must be 'minus' or 'plus', got {side!r}")


def section_degree_filter(dec: WallDecomposition) -> bool:
    """``k1 <= d1`` and ``k2 < d2``: necessary for a genuine wall."""
    return dec.k1 <= dec.d1 and dec.k2 < dec.d2


def _alive_below(interval: AlphaInterval, alpha: Fraction) -> bool:
    # Factor must be non-empty for alpha slightly below the wall, so the
    # closed upper endpoint is admitted.
    if interval.empty:
        return False
    if interval.all_alpha:
        return True
    return alpha <= interval.sup


def candidate_decompositions(n: int, d: int, k: int) -> list[WallDecomposition]:
    """All splittings passing the numerical and factor non-emptiness filters."""
    if n < 2 or k < 1:
        raise ValueError(f"walls undefined for this type (n={n}, d={d}, k={k}); need n >= 2, k >= 1")
    found = []
    for n1 in range(1, n):
        n2 = n - n1
        for k1 in range(0, k + 1):
            k2 = k - k1
            denom = n2 * k1 - n1 * k2
            if denom <= 0:
                continue
            for d1 in range(0, d + 1):
                d2 = d - d1
                if d1 * n2 >= d2 * n1:
                    continue
                alpha = Fraction(n1 * d2 - n2 * d1, denom)
                if alpha <= 0 or (n - k) * alpha >= d:
                    continue
                if not _alive_below(alpha_range(n1, d1, k1), alpha):
                    continue
                if not _alive_below(alpha_range(n2, d2, k2), alpha):
                    continue
                found.append(WallDecomposition(n1, d1, k1, n2, d2, k2))
    return found


def enumerate_walls(n: int, d: int, k: int) -> list[Wall]:
    """Critical values of (n, d, k) in increasing order, each with all its decompositions."""
    grouped: dict[Fraction, list[WallDecomposition]] = defaultdict(list)
    for dec in candidate_decompositions(n, d, k):
        grouped[dec.alpha].append(dec)
    return [Wall(alpha, tuple(sorted(decs))) for alpha, decs in sorted(grouped.items())]
