"""Exact rationals and the small ring vocabulary shared by the other modules.

Rationals are :class:`fractions.Fraction`, which already keeps every value
reduced with a positive denominator and uses Python's unbounded ints.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


@dataclass(frozen=True)
class Ring:
    """Descriptor of a ring with identity.

    Elements are plain Python objects supporting ``+``, ``-``, ``*`` and
    ``==``; the descriptor only supplies the identities and records whether
    multiplication commutes, which decides where determinants are legal.
    """

    name: str
    zero: Any
    one: Any
    commutative: bool

    def __repr__(self):
        return self.name

    def is_zero(self, x) -> bool:
        return x == self.zero


ZZ = Ring("ZZ", 0, 1, True)
QQ = Ring("QQ", Fraction(0), Fraction(1), True)


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(a) + Fraction(b)


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(a) * Fraction(b)


def rat_cmp(a: Fraction, b: Fraction) -> int:
    """Three-way comparison: -1, 0 or 1 as ``a`` is below, equal to or above ``b``."""
    a, b = Fraction(a), Fraction(b)
    return (a > b) - (a < b)


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a canonical Fraction.

    Python ints are accepted as-is. Decimal and float notation are refused
    so that no rounding can sneak in.

    >>> parse_rational("-6/14")
    Fraction(-3, 7)
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational string: {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational string: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(x) -> str:
    """Canonical text form, ``"p/q"`` or ``"p"`` when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
