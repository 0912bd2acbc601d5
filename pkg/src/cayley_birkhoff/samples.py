"""Seeded random inputs: integer matrices, matrix polynomials, bistochastic matrices."""

from __future__ import annotations

import random
from fractions import Fraction

from .exact_arith import ZZ
from .matrix_alg import SquareMatrix, matrix_ring
from .polyring import Polynomial


def random_int_matrix(rng: random.Random, n: int, lo: int = -9, hi: int = 9) -> SquareMatrix:
    return SquareMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)], ZZ)


def random_matrix_poly(rng: random.Random, n: int, max_degree: int,
                       lo: int = -5, hi: int = 5) -> Polynomial:
    """Polynomial of degree at most ``max_degree`` over ``M_n(ZZ)``."""
    deg = rng.randint(0, max_degree)
    coeffs = [random_int_matrix(rng, n, lo, hi) for _ in range(deg + 1)]
    return Polynomial(coeffs, matrix_ring(n, ZZ))


def random_permutation(rng: random.Random, n: int) -> tuple[int, ...]:
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def random_weights(rng: random.Random, k: int, resolution: int = 12) -> list[Fraction]:
    """``k`` positive rationals summing to exactly 1."""
    raw = [rng.randint(1, resolution) for _ in range(k)]
    total = sum(raw)
    return [Fraction(r, total) for r in raw]


def convex_combination(weights, perms, n: int) -> list[list[Fraction]]:
    out = [[Fraction(0)] * n for _ in range(n)]
    for w, p in zip(weights, perms):
        for i in range(n):
            out[i][p[i]] += w
    return out


def random_bistochastic(rng: random.Random, n: int, max_terms: int = 12) -> list[list[Fraction]]:
    """Random rational convex combination of up to ``max_terms`` random permutations.

    Bistochastic by construction; repeated permutations simply merge.
    """
    k = rng.randint(1, max_terms)
    perms = [random_permutation(rng, n) for _ in range(k)]
    return convex_combination(random_weights(rng, k), perms, n)
