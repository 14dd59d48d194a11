"""Integer Chern data of Picard bundles over M(n, d) ~ X, and the projective-bundle test.

``H^2(M)`` is ``Z``, generated by the fundamental class ``[M]``, so each
class is recorded as its integer coefficient:

* ``a1 = r[M]`` is c1 of the line-bundle twist of the Poincare bundle,
* ``f2 = (n-1)s[M]`` is the c2 coefficient,
* c1 of the Picard bundle is ``s[M]``,

with ``r*d - s*n = 1``. Changing the Poincare bundle moves ``r`` by multiples
of ``n`` and ``s`` by multiples of ``d``, so ``s mod d`` is canonical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .arith import mod_inverse
from .moduli import brill_noether


class Verdict(str, Enum):
    NON_ISOMORPHIC = "NonIsomorphic"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class PicardInvariants:
    n: int
    d: int
    r: int
    s: int

    @property
    def f2_coeff(self) -> int:
        return (self.n - 1) * self.s

    @property
    def c1_coeff(self) -> int:
        return self.s

    @property
    def picard_rank(self) -> int:
        return self.d

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "r": self.r,
            "s": self.s,
            "f2_coeff": self.f2_coeff,
            "c1_coeff": self.c1_coeff,
            "picard_rank": self.picard_rank,
        }


@dataclass(frozen=True)
class IsoVerdict:
    n: int
    d: int
    k: int
    s_mod_d: int
    s_prime_mod_d: int

    @property
    def sum_mod_d(self) -> int:
        return (self.s_mod_d + self.s_prime_mod_d) % self.d

    @property
    def verdict(self) -> Verdict:
        # Only the non-isomorphism direction is a theorem; a zero sum proves nothing.
        return Verdict.NON_ISOMORPHIC if self.sum_mod_d != 0 else Verdict.INCONCLUSIVE

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "k": self.k,
            "s": self.s_mod_d,
            "s_prime": self.s_prime_mod_d,
            "sum_mod_d": self.sum_mod_d,
            "verdict": self.verdict.value,
        }


def picard_invariants(n: int, d: int) -> PicardInvariants:
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    if d <= 0:
        raise ValueError("requires d > 0")
    if math.gcd(n, d) != 1:
        raise ValueError(f"requires coprime rank and degree, got gcd({n}, {d}) = {math.gcd(n, d)}")
    if n == 1:
        return PicardInvariants(n, d, r=0, s=-1)
    r = mod_inverse(d, n)
    s, rem = divmod(r * d - 1, n)
    assert rem == 0
    return PicardInvariants(n, d, r=r, s=s)


def dual_picard_residue(m: int, d: int) -> int:
    """The residue ``s'`` in ``[0, d)`` with ``s' * m == -1 (mod d)``."""
    if m < 1 or d < 1:
        raise ValueError(f"need m >= 1 and d >= 1, got m={m}, d={d}")
    if math.gcd(m, d) != 1:
        raise ValueError(f"requires gcd(m, d) = 1, got gcd({m}, {d}) = {math.gcd(m, d)}")
    return (-mod_inverse(m, d)) % d


def check_iso_hypotheses(n: int, d: int, k: int) -> None:
    """Raise ``ValueError`` naming the first failed hypothesis of :func:`iso_test`."""
    if not 0 < k < n:
        raise ValueError(f"hypothesis 0 < k < n fails for (n={n}, k={k})")
    if not k < d:
        raise ValueError(f"hypothesis k < d fails for (d={d}, k={k})")
    if math.gcd(n, d) != 1:
        raise ValueError(f"hypothesis gcd(n, d) = 1 fails: gcd({n}, {d}) = {math.gcd(n, d)}")
    if math.gcd(n - k, d) != 1:
        raise ValueError(f"hypothesis gcd(n-k, d) = 1 fails: gcd({n - k}, {d}) = {math.gcd(n - k, d)}")


def iso_hypotheses_hold(n: int, d: int, k: int) -> bool:
    try:
        check_iso_hypotheses(n, d, k)
    except ValueError:
        return False
    return True


def iso_test(n: int, d: int, k: int) -> IsoVerdict:
    """Compare the small-alpha and large-alpha Grassmannian bundles of type (n, d, k).

    ``NonIsomorphic`` is certified when ``s + s'`` is non-zero mod ``d``;
    otherwise the answer is ``Inconclusive`` and must stay that way.
    """
    check_iso_hypotheses(n, d, k)
    s = picard_invariants(n, d).s % d
    s_prime = dual_picard_residue(n - k, d)
    return IsoVerdict(n, d, k, s, s_prime)


@dataclass(frozen=True)
class GrassmannianSide:
    base_rank: int
    k: int
    bundle_rank: int
    c1: int
    dimension: int

    def to_json(self) -> dict:
        return {
            "base": f"M({self.base_rank},{self.bundle_rank}) = X",
            "fiber": f"Gr({self.k},{self.bundle_rank})",
            "bundle_rank": self.bundle_rank,
            "c1": self.c1,
            "dimension": self.dimension,
        }


@dataclass(frozen=True)
class GrassmannianModel:
    G0: GrassmannianSide
    GL: GrassmannianSide | None

    def to_json(self) -> dict:
        return {"G0": self.G0.to_json(), "GL": self.GL.to_json() if self.GL else None}


def grassmannian_model(n: int, d: int, k: int) -> GrassmannianModel:
    """Both extreme moduli spaces as Grassmannian bundles of k-planes in rank-d bundles over X.

    G0 lives over M(n, d) and needs ``gcd(n, d) = 1``; GL lives over
    M(n-k, d) and is ``None`` unless ``gcd(n-k, d) = 1`` as well.
    """
    if not 0 < k < n or not k < d:
        raise ValueError(f"need 0 < k < n and k < d, got (n={n}, d={d}, k={k})")
    if math.gcd(n, d) != 1:
        raise ValueError(f"hypothesis gcd(n, d) = 1 fails: gcd({n}, {d}) = {math.gcd(n, d)}")
    dim = brill_noether(d, k)
    g0 = GrassmannianSide(n, k, d, picard_invariants(n, d).s, dim)
    gl = None
    if math.gcd(n - k, d) == 1:
        gl = GrassmannianSide(n - k, k, d, -dual_picard_residue(n - k, d), dim)
    return GrassmannianModel(g0, gl)
