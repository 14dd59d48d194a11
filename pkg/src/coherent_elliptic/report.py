"""Aggregate reports for a type (n, d, k) and the batch property sweeps behind ``sweep``."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .arith import INF, format_rational
from .moduli import (
    AlphaInterval,
    GenericShape,
    ModuliQuery,
    alpha_range,
    brill_noether,
    generic_shape,
    is_nonempty,
)
from .oracle import agreement_cases
from .picard import IsoVerdict, PicardInvariants, iso_hypotheses_hold, iso_test, picard_invariants
from .walls import Wall, enumerate_walls, flip_locus_dim, section_degree_filter

FLIP_MODEL_NOTE = (
    "flip dimensions are model dimensions: they assume Hom and Ext^2 between "
    "the two factors vanish"
)
SAME_VARIETY_NOTE = (
    "single wall of type (2m+1,2,2)+(m,1,0): G0 and GL are isomorphic varieties; "
    "only the families of coherent systems they carry differ across the wall"
)
SMALL_ALPHA_NOTE = "no alpha given: nonempty means some alpha > 0 gives a non-empty moduli space"


@dataclass
class AnalysisReport:
    query: ModuliQuery
    nonempty: bool
    interval: AlphaInterval
    dimension: Optional[int] = None
    walls: list[Wall] = field(default_factory=list)
    shape: Optional[GenericShape] = None
    picard: Optional[PicardInvariants] = None
    iso: Optional[IsoVerdict] = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        q = self.query
        out: dict[str, Any] = {
            "query": {
                "n": q.n,
                "d": q.d,
                "k": q.k,
                "alpha": None if q.alpha is None else format_rational(q.alpha),
            },
            "nonempty": self.nonempty,
            "dimension": self.dimension,
            "interval": self.interval.to_json(),
            "walls": [w.to_json() for w in self.walls],
            "shape": None if self.shape is None else self.shape.to_json(),
            "picard": None,
            "notes": list(self.notes),
        }
        if self.iso is not None and self.picard is not None:
            out["picard"] = {"invariants": self.picard.to_json(), "iso": self.iso.to_json()}
        return out


def _representative_alpha(interval: AlphaInterval) -> Fraction:
    if interval.all_alpha or interval.sup == INF:
        return Fraction(1)
    return interval.sup / 2


def build_report(n: int, d: int, k: int, alpha: Optional[Fraction] = None) -> AnalysisReport:
    query = ModuliQuery(n, d, k, alpha)
    interval = alpha_range(n, d, k)
    notes = []
    if alpha is None or k == 0:
        nonempty = not interval.empty
        if alpha is None and k >= 1:
            notes.append(SMALL_ALPHA_NOTE)
    else:
        nonempty = is_nonempty(query)
    report = AnalysisReport(query=query, nonempty=nonempty, interval=interval)
    if nonempty:
        report.dimension = brill_noether(d, k)
        probe = query if alpha is not None else ModuliQuery(n, d, k, _representative_alpha(interval))
        report.shape = generic_shape(probe)
    if n >= 2 and k >= 1:
        report.walls = enumerate_walls(n, d, k)
        if report.walls:
            notes.append(FLIP_MODEL_NOTE)
        if len(report.walls) == 1 and d == 3 and k == 2:
            decs = report.walls[0].decompositions
            if len(decs) == 1 and (decs[0].d1, decs[0].k1, decs[0].d2, decs[0].k2) == (2, 2, 1, 0):
                notes.append(SAME_VARIETY_NOTE)
    if iso_hypotheses_hold(n, d, k):
        report.picard = picard_invariants(n, d)
        report.iso = iso_test(n, d, k)
    report.notes = notes
    return report


# -- rendering ---------------------------------------------------------------


def to_json_text(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2)


def flatten(data: Any, prefix: str = "") -> list[tuple[str, Any]]:
    if isinstance(data, dict):
        rows: list[tuple[str, Any]] = []
        for key in sorted(data):
            rows.extend(flatten(data[key], f"{prefix}.{key}" if prefix else key))
        return rows
    if isinstance(data, list):
        if not data:
            return [(prefix, [])]
        rows = []
        for i, item in enumerate(data):
            rows.extend(flatten(item, f"{prefix}[{i}]"))
        return rows
    return [(prefix, data)]


def to_text(data: Any) -> str:
    """One ``path: value`` line per leaf; values are JSON scalars."""
    return "\n".join(f"{path}: {json.dumps(value)}" for path, value in flatten(data))


def parse_text(text: str) -> list[tuple[str, Any]]:
    rows = []
    for line in text.splitlines():
        path, _, value = line.partition(": ")
        rows.append((path, json.loads(value)))
    return rows


# -- sweeps ------------------------------------------------------------------


@dataclass
class SweepResult:
    check: str
    cases: int = 0
    violations: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"check": self.check, "cases": self.cases, "violations": len(self.violations), "examples": self.violations[:20]}

    def summary(self) -> str:
        return f"{self.check}: {self.cases} cases checked, {len(self.violations)} violations"


def sweep_positivity(max_n: int, max_d: int, max_k: int) -> SweepResult:
    """C12 > 0 and C21 > 0 for every surviving decomposition, plus the companion checks.

    Each decomposition is also checked against the ``k1 <= d1, k2 < d2``
    filter and the codimension bound ``beta(d,k) - dim G^- >= min C12``.
    """
    res = SweepResult("positivity")
    for n in range(2, max_n + 1):
        for d in range(1, max_d + 1):
            for k in range(1, max_k + 1):
                for wall in enumerate_walls(n, d, k):
                    for dec in wall.decompositions:
                        res.cases += 1
                        tag = f"(n={n},d={d},k={k}) {dec}"
                        if dec.c12 <= 0 or dec.c21 <= 0:
                            res.violations.append(f"non-positive C12/C21 at {tag}")
                        if not section_degree_filter(dec):
                            res.violations.append(f"k1<=d1, k2<d2 fails at {tag}")
                        if brill_noether(d, k) - flip_locus_dim(dec, "minus") < wall.min_c12:
                            res.violations.append(f"codim bound fails at {tag}")
    return res


def alpha_grid(max_pq: int = 16) -> list[Fraction]:
    return sorted({Fraction(p, q) for p in range(1, max_pq + 1) for q in range(1, max_pq + 1)})


def sweep_interval_consistency(max_n: int, max_d: int, max_k: int, max_pq: int = 16) -> SweepResult:
    res = SweepResult("interval-consistency")
    grid = alpha_grid(max_pq)
    for n in range(1, max_n + 1):
        for d in range(-max_d, max_d + 1):
            for k in range(0, max_k + 1):
                interval = alpha_range(n, d, k)
                for alpha in grid:
                    res.cases += 1
                    if is_nonempty(ModuliQuery(n, d, k, alpha)) != (alpha in interval):
                        res.violations.append(f"(n={n},d={d},k={k},alpha={format_rational(alpha)})")
    return res


def sweep_oracle_agreement(max_n: int, max_d: int, max_k: int) -> SweepResult:
    res = SweepResult("oracle-agreement")
    for n, d, k, alpha, oracle, theorem in agreement_cases(max_n, max_d, max_k):
        res.cases += 1
        if oracle != theorem:
            res.violations.append(
                f"(n={n},d={d},k={k},alpha={format_rational(alpha)}) oracle={oracle} theorem={theorem}"
            )
    return res


SWEEPS = {
    "positivity": sweep_positivity,
    "interval-consistency": sweep_interval_consistency,
    "oracle-agreement": sweep_oracle_agreement,
}

