"""Exact scalars: reduced rationals, a +infinity sentinel, Bezout and modular inverses.

Rationals are plain :class:`fractions.Fraction` values. ``Fraction`` already
stores a reduced numerator over a positive denominator and orders by
cross-multiplication, which is everything the rest of the package relies on.

The unbounded end of an interval is :data:`INF` (``math.inf``); it compares
greater than every ``Fraction`` without ever taking part in arithmetic.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

Rational = Fraction
ExtendedRational = Union[Fraction, float]

INF = math.inf

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")


def make_rational(p: int, q: int = 1) -> Fraction:
    """Return ``p/q`` in lowest terms with a positive denominator."""
    if q == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(p, q)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``. Decimal and float spellings are rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r} (expected 'p/q' or 'p')")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    return make_rational(p, q)


def parse_extended(text: str) -> ExtendedRational:
    if text.strip() == "inf":
        return INF
    return parse_rational(text)


def format_rational(x: ExtendedRational) -> str:
    """Canonical text form: ``"p/q"``, ``"p"`` for integers, ``"inf"`` for +infinity."""
    if x == INF:
        return "inf"
    if not isinstance(x, Fraction):
        x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def bezout(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: ``(g, x, y)`` with ``g = gcd(a, b) > 0`` and ``a*x + b*y == g``."""
    if a == 0 and b == 0:
        raise ValueError("bezout undefined for (0, 0)")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def mod_inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m``, as a representative in ``[0, m)``."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if math.gcd(a, m) != 1:
        raise ValueError(f"not invertible: gcd({a}, {m}) != 1")
    if m == 1:
        return 0
    _, x, _ = bezout(a % m, m)
    return x % m
