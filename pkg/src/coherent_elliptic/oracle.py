"""Brute-force alpha-stability for a generic section space on a polystable bundle.

For ``E = E_1 + ... + E_h`` polystable with distinct summands and ``alpha``
small and positive, the only subbundles that can destabilise ``(E, V)`` are
those of slope ``mu(E)``, namely sums of some of the ``E_j``. For a general
``k``-dimensional ``V`` each such ``G`` meets ``V`` in dimension
``max(0, h0(G) - codim V)``. The oracle enumerates all ``2^h - 2`` proper
subsets and checks the alpha-slope inequality for each.

Scope: this is only valid below the first critical value. Subsystems built
from saturations of sections (which enforce the upper bound ``d/(n-k)``) are
not modelled, so the verdict is meaningless for larger alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .bundles import Bundle, aut_dim_status, generic_polystable, h0_bundle, h0_indecomposable
from .moduli import ModuliQuery, is_nonempty
from .walls import enumerate_walls


@dataclass(frozen=True)
class GenericSystemModel:
    bundle: Bundle
    k: int

    def __post_init__(self) -> None:
        if not aut_dim_status(self.bundle).minimal:
            raise ValueError("bundle must be polystable with pairwise non-isomorphic summands")
        if not 0 <= self.k <= h0_bundle(self.bundle):
            raise ValueError(f"need 0 <= k <= h0(E) = {h0_bundle(self.bundle)}, got k={self.k}")

    @property
    def n(self) -> int:
        return self.bundle.rank

    @property
    def d(self) -> int:
        return self.bundle.degree

    @property
    def codim(self) -> int:
        return h0_bundle(self.bundle) - self.k


@dataclass(frozen=True)
class SubsystemCandidate:
    subset: tuple[int, ...]
    rank: int
    degree: int
    generic_overlap: int


def mu_alpha(degree: int, rank: int, sections: int, alpha: Fraction) -> Fraction:
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    return Fraction(degree, rank) + Fraction(alpha) * Fraction(sections, rank)


def candidates(model: GenericSystemModel) -> list[SubsystemCandidate]:
    summands = model.bundle.summands
    out = []
    for size in range(1, len(summands)):
        for subset in combinations(range(len(summands)), size):
            parts = [summands[i] for i in subset]
            h0 = sum(h0_indecomposable(s) for s in parts)
            out.append(
                SubsystemCandidate(
                    subset=subset,
                    rank=sum(s.rank for s in parts),
                    degree=sum(s.degree for s in parts),
                    generic_overlap=max(0, h0 - model.codim),
                )
            )
    return out


def verify_slope_inequality(model: GenericSystemModel, cand: SubsystemCandidate) -> bool:
    """The alpha-free form ``overlap / rk(G) < k / n`` of the small-alpha test."""
    return cand.generic_overlap * model.n < model.k * cand.rank


def is_generically_stable_small_alpha(model: GenericSystemModel, alpha: Fraction) -> bool:
    # A subsystem with fewer sections than the full overlap has smaller
    # alpha-slope, so one inequality per subset suffices.
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    target = mu_alpha(model.d, model.n, model.k, alpha)
    return all(mu_alpha(c.degree, c.rank, c.generic_overlap, alpha) < target for c in candidates(model))


def sub_wall_alpha(n: int, d: int, k: int) -> Fraction:
    """A positive alpha below the first wall and below ``d/(n-k)`` (when that is positive)."""
    alpha = Fraction(1, 4)
    if n >= 2 and k >= 1:
        walls = enumerate_walls(n, d, k)
        if walls:
            alpha = min(alpha, walls[0].alpha / 2)
    if k < n and d > 0:
        alpha = min(alpha, Fraction(d, n - k) / 2)
    return alpha


def oracle_verdict(n: int, d: int, k: int, alpha: Fraction) -> bool:
    """Generic-position verdict for type (n, d, k) on the general polystable bundle.

    When ``k > h0(E)`` no k-dimensional section space exists, so the verdict
    is ``False``.
    """
    bundle = generic_polystable(n, d)
    if k > h0_bundle(bundle):
        return False
    return is_generically_stable_small_alpha(GenericSystemModel(bundle, k), alpha)


def agreement_cases(max_n: int = 6, max_d: int = 6, max_k: int = 6):
    """Yield ``(n, d, k, alpha, oracle, theorem)`` over the standard comparison grid."""
    for n in range(2, max_n + 1):
        for d in range(1, max_d + 1):
            for k in range(1, min(d + 1, max_k) + 1):
                alpha = sub_wall_alpha(n, d, k)
                yield n, d, k, alpha, oracle_verdict(n, d, k, alpha), is_nonempty(ModuliQuery(n, d, k, alpha))

