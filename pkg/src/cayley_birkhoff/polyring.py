"""Univariate polynomials over an arbitrary ring with identity.

Coefficients are written on the left, ``a_i x^i``, and the indeterminate
commutes with every coefficient (``r x = x r``).  The coefficient ring may be
noncommutative, e.g. square matrices, so every product here keeps the order
``a_i * b_j`` with ``a_i`` taken from the left factor.

Substituting a ring element ``r`` for ``x`` is only multiplicative when ``r``
commutes with the coefficients of one of the factors; see
:func:`commutes_with_coeffs`.  Both substitution conventions are provided:
:func:`evaluate_right` computes ``sum a_i r^i`` and :func:`evaluate_left`
computes ``sum r^i a_i``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Any, Callable, Sequence

from .exact_arith import Ring, format_rational


class Polynomial:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of ``x**i``.

    Trailing zeros are trimmed on construction, so the zero polynomial has
    an empty coefficient tuple and ``degree`` ``None``.
    """

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Sequence[Any], ring: Ring):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == ring.zero:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.ring = ring

    @classmethod
    def zero(cls, ring: Ring) -> Polynomial:
        return cls((), ring)

    @classmethod
    def constant(cls, c, ring: Ring) -> Polynomial:
        return cls((c,), ring)

    @classmethod
    def x(cls, ring: Ring) -> Polynomial:
        return cls((ring.zero, ring.one), ring)

    @classmethod
    def monomial(cls, c, k: int, ring: Ring) -> Polynomial:
        return cls([ring.zero] * k + [c], ring)

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial (minus infinity)."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.zero

    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    def map_coeffs(self, fn: Callable[[Any], Any], ring: Ring) -> Polynomial:
        return Polynomial([fn(c) for c in self.coeffs], ring)

    def _check(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring != self.ring:
            raise ValueError(f"coefficient rings differ: {self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return poly_add(self, other)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return poly_add(self, -other)

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.ring)

    def __mul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return poly_mul(self, other)

    def __pow__(self, k: int):
        result = Polynomial.constant(self.ring.one, self.ring)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r}, {self.ring!r})"

    def __str__(self):
        return format_poly(self)


@lru_cache(maxsize=None)
def poly_ring(base: Ring) -> Ring:
    """The ring ``base[x]`` as a :class:`Ring` descriptor."""
    return Ring(
        f"{base.name}[x]",
        Polynomial.zero(base),
        Polynomial.constant(base.one, base),
        base.commutative,
    )


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    n = max(len(f.coeffs), len(g.coeffs))
    return Polynomial([f.coeff(k) + g.coeff(k) for k in range(n)], f.ring)


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    """Convolution product; the ``x^k`` coefficient is ``sum a_i * b_j`` over ``i + j = k``."""
    if f.is_zero() or g.is_zero():
        return Polynomial.zero(f.ring)
    out = [f.ring.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] = out[i + j] + a * b
    return Polynomial(out, f.ring)


def evaluate_right(f: Polynomial, r):
    """``sum a_i r^i``, coefficients kept on the left of the powers of ``r``."""
    acc = f.ring.zero
    for a in reversed(f.coeffs):
        acc = acc * r + a
    return acc


def evaluate_left(f: Polynomial, r):
    """``sum r^i a_i``, the substitution for the ``x^i a_i`` standard form."""
    acc = f.ring.zero
    for a in reversed(f.coeffs):
        acc = r * acc + a
    return acc


def commutes_with_coeffs(r, f: Polynomial) -> bool:
    return all(r * a == a * r for a in f.coeffs)


def linear_factor(r, ring: Ring) -> Polynomial:
    """The monic polynomial ``x - r``."""
    return Polynomial((-r, ring.one), ring)


def divide_right_linear(f: Polynomial, r) -> tuple[Polynomial, Any]:
    """Split ``f = q(x) (x - r) + rem`` with ``rem = evaluate_right(f, r)``.

    Synthetic division from the top: ``q_{k-1} = a_k + q_k r``, and the
    remainder is ``a_0 + q_0 r``.
    """
    ring = f.ring
    if f.is_zero():
        return Polynomial.zero(ring), ring.zero
    a = f.coeffs
    q = [ring.zero] * (len(a) - 1)
    carry = ring.zero
    for k in range(len(a) - 1, 0, -1):
        carry = a[k] + carry * r
        q[k - 1] = carry
    rem = a[0] + carry * r
    return Polynomial(q, ring), rem


def divide_left_linear(f: Polynomial, r) -> tuple[Polynomial, Any]:
    """Split ``f = (x - r) q(x) + rem`` with ``rem = evaluate_left(f, r)``."""
    ring = f.ring
    if f.is_zero():
        return Polynomial.zero(ring), ring.zero
    a = f.coeffs
    q = [ring.zero] * (len(a) - 1)
    carry = ring.zero
    for k in range(len(a) - 1, 0, -1):
        carry = a[k] + r * carry
        q[k - 1] = carry
    rem = a[0] + r * carry
    return Polynomial(q, ring), rem


def _default_coeff_format(c) -> str:
    if isinstance(c, int) or hasattr(c, "denominator"):
        return format_rational(c)
    return str(c)


def format_poly(f: Polynomial, fmt: Callable[[Any], str] | None = None) -> str:
    """Human-readable form, highest degree first, e.g. ``x^2 - 5x - 2``.

    Scalar coefficients get sign folding and unit elision; any other
    coefficient type is printed in parentheses via ``fmt`` (``str`` by default).
    """
    if f.is_zero():
        return "0"
    fmt = fmt or _default_coeff_format
    scalar = all(isinstance(c, int) or hasattr(c, "denominator") for c in f.coeffs)
    parts: list[str] = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if c == f.ring.zero:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if scalar:
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if mag == 1 and mono:
                body = mono
            else:
                text = fmt(mag)
                if "/" in text and mono:
                    text = f"({text})"
                body = text + mono
        else:
            sign = "+"
            body = f"({fmt(c)})" + ("·" + mono if mono else "")
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)
