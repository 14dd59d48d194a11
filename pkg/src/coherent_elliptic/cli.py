"""Command-line front end.

Exit codes: 0 success, 1 property violation (``sweep``), 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Optional, Sequence

from .arith import format_rational, parse_rational
from .bundles import generic_polystable, h0_bundle
from .moduli import ModuliQuery, generic_shape, is_nonempty
from .oracle import (
    GenericSystemModel,
    candidates,
    is_generically_stable_small_alpha,
    sub_wall_alpha,
    verify_slope_inequality,
)
from .picard import grassmannian_model, iso_test, picard_invariants
from .report import SWEEPS, build_report, to_json_text, to_text
from .walls import enumerate_walls


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _rational(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"bound must be >= 1, got {value}")
    return value


def _build_parser() -> _Parser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=["json", "text"], default=None)

    typ = _Parser(add_help=False)
    typ.add_argument("--n", type=int, required=True)
    typ.add_argument("--d", type=int, required=True)
    typ.add_argument("--k", type=int, required=True)

    parser = _Parser(prog="coherent-elliptic", description=__doc__)
    parser.add_argument("--format", dest="global_format", choices=["json", "text"], default=None)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[fmt, typ], help="full report for a type (n, d, k)")
    p.add_argument("--alpha", type=_rational)
    sub.add_parser("walls", parents=[fmt, typ], help="critical values with C12/C21 and flip dimensions")
    p = sub.add_parser("picard", parents=[fmt], help="Picard bundle coefficients r, s, f2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, help="also describe both Grassmannian bundle models")
    sub.add_parser("iso", parents=[fmt, typ], help="non-isomorphism test for the extreme moduli spaces")
    p = sub.add_parser("shape", parents=[fmt, typ], help="generic element of G(alpha; n, d, k)")
    p.add_argument("--alpha", type=_rational)
    p = sub.add_parser("verify", parents=[fmt, typ], help="brute-force small-alpha oracle")
    p.add_argument("--alpha", type=_rational)
    p = sub.add_parser("sweep", parents=[fmt], help="batch property checks")
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--max-d", type=_positive, required=True)
    p.add_argument("--max-k", type=_positive, required=True)
    p.add_argument("--check", choices=sorted(SWEEPS), required=True)
    return parser


def _cmd_analyze(args) -> dict:
    return build_report(args.n, args.d, args.k, args.alpha).to_json()


def _cmd_walls(args) -> list:
    return [w.to_json() for w in enumerate_walls(args.n, args.d, args.k)]


def _cmd_picard(args) -> dict:
    out: dict[str, Any] = picard_invariants(args.n, args.d).to_json()
    if args.k is not None:
        out["grassmannian"] = grassmannian_model(args.n, args.d, args.k).to_json()
    return out


def _cmd_iso(args) -> dict:
    return iso_test(args.n, args.d, args.k).to_json()


def _require_alpha(args) -> ModuliQuery:
    if args.k >= 1 and args.alpha is None:
        raise ValueError("alpha required when k >= 1")
    return ModuliQuery(args.n, args.d, args.k, args.alpha)


def _cmd_shape(args) -> dict:
    return generic_shape(_require_alpha(args)).to_json()


def _cmd_verify(args) -> dict:
    alpha = args.alpha if args.alpha is not None else sub_wall_alpha(args.n, args.d, args.k)
    bundle = generic_polystable(args.n, args.d)
    out: dict[str, Any] = {
        "n": args.n,
        "d": args.d,
        "k": args.k,
        "alpha": format_rational(alpha),
        "bundle": bundle.to_json(),
        "theorem_nonempty": is_nonempty(ModuliQuery(args.n, args.d, args.k, alpha)),
        "note": "valid only for alpha below the first wall",
    }
    if args.k > h0_bundle(bundle):
        out.update(candidates=[], oracle_stable=False)
        return out
    model = GenericSystemModel(bundle, args.k)
    out["candidates"] = [
        {
            "subset": list(c.subset),
            "rank": c.rank,
            "degree": c.degree,
            "generic_overlap": c.generic_overlap,
            "inequality_holds": verify_slope_inequality(model, c),
        }
        for c in candidates(model)
    ]
    out["oracle_stable"] = is_generically_stable_small_alpha(model, alpha)
    return out


COMMANDS = {
    "analyze": _cmd_analyze,
    "walls": _cmd_walls,
    "picard": _cmd_picard,
    "iso": _cmd_iso,
    "shape": _cmd_shape,
    "verify": _cmd_verify,
}


def _emit(data: Any, fmt: str, out) -> None:
    out.write((to_json_text(data) if fmt == "json" else to_text(data)) + "\n")


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(f"coherent-elliptic: error: {exc}\n")
        return 2
    fmt = args.format or args.global_format or "text"

    if args.command == "sweep":
        result = SWEEPS[args.check](args.max_n, args.max_d, args.max_k)
        if fmt == "json":
            _emit(result.to_json(), fmt, stdout)
        else:
            stdout.write(result.summary() + "\n")
            for line in result.violations[:20]:
                stdout.write(f"  {line}\n")
        return 1 if result.violations else 0

    try:
        data = COMMANDS[args.command](args)
    except (ValueError, ZeroDivisionError) as exc:
        stderr.write(f"coherent-elliptic: error: {exc}\n")
        return 2
    _emit(data, fmt, stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
