import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from cayley_birkhoff.exact_arith import QQ, ZZ
from cayley_birkhoff.matrix_alg import SquareMatrix, matrix_ring
from cayley_birkhoff.polyring import (
    Polynomial, commutes_with_coeffs, divide_left_linear, divide_right_linear,
    evaluate_left, evaluate_right, format_poly, linear_factor, poly_add, poly_mul,
)
from cayley_birkhoff.samples import random_int_matrix, random_matrix_poly

import oracles

M2 = matrix_ring(2, ZZ)
M3 = matrix_ring(3, ZZ)
N = SquareMatrix([[0, 1], [0, 0]], ZZ)
M = SquareMatrix([[0, 0], [1, 0]], ZZ)


def qpoly(*coeffs):
    return Polynomial([F(c) for c in coeffs], QQ)


def naive_eval(f, r, left=False):
    """sum a_i r^i (or r^i a_i) by explicit powers."""
    acc = f.ring.zero
    for i, a in enumerate(f.coeffs):
        p = r ** i
        acc = acc + (p * a if left else a * p)
    return acc


def test_zero_polynomial():
    z = Polynomial.zero(QQ)
    assert z.degree is None and z.coeffs == ()
    assert Polynomial([F(0), F(0)], QQ) == z


def test_add_examples():
    assert qpoly(1, 0, 1) + qpoly(0, 0, -1) == qpoly(1)
    assert (qpoly(1, 0, 1) + qpoly(0, 0, -1)).degree == 0
    f = qpoly(3, -1, 2)
    assert poly_add(f, Polynomial.zero(QQ)) == f
    E11 = SquareMatrix([[1, 0], [0, 0]], ZZ)
    E22 = SquareMatrix([[0, 0], [0, 1]], ZZ)
    s = Polynomial.monomial(E11, 1, M2) + Polynomial.monomial(E22, 1, M2)
    assert s == Polynomial.monomial(M2.one, 1, M2)


def test_mul_noncommuting_coefficients():
    assert oracles.matmul(N.tolist(), M.tolist()) == [[1, 0], [0, 0]]
    NM = Polynomial.monomial(N, 1, M2) * Polynomial.monomial(M, 1, M2)
    MN = Polynomial.monomial(M, 1, M2) * Polynomial.monomial(N, 1, M2)
    assert NM == Polynomial.monomial(SquareMatrix([[1, 0], [0, 0]], ZZ), 2, M2)
    assert MN == Polynomial.monomial(SquareMatrix([[0, 0], [0, 1]], ZZ), 2, M2)


def test_mul_examples():
    f = qpoly(2, 0, -3, 1)
    assert poly_mul(f, qpoly(1)) == f
    r = F(7, 2)
    assert linear_factor(r, QQ) * Polynomial((r, F(1)), QQ) == qpoly(-r * r, 0, 1)


def test_evaluate_right_cayley_hamilton_instance():
    A = SquareMatrix([[1, 2], [3, 4]], ZZ)
    E = M2.one
    f = Polynomial([E.scale(-2), E.scale(-5), E], M2)
    # A^2 - 5A - 2E computed directly on lists
    a = A.tolist()
    direct = [[oracles.matmul(a, a)[i][j] - 5 * a[i][j] - 2 * (i == j) for j in range(2)] for i in range(2)]
    assert direct == [[0, 0], [0, 0]]
    assert evaluate_right(f, A) == M2.zero


def test_evaluate_trivial():
    c = SquareMatrix([[1, 2], [3, 5]], ZZ)
    r = SquareMatrix([[2, 0], [1, 1]], ZZ)
    assert evaluate_right(Polynomial.constant(c, M2), r) == c
    assert evaluate_left(Polynomial.constant(c, M2), r) == c
    assert evaluate_right(Polynomial.x(M2), r) == r


def test_evaluate_left_differs():
    f = Polynomial.monomial(N, 1, M2)
    assert evaluate_right(f, M) == SquareMatrix([[1, 0], [0, 0]], ZZ)
    assert evaluate_left(f, M) == SquareMatrix([[0, 0], [0, 1]], ZZ)


@given(st.lists(st.fractions(max_denominator=50), max_size=6), st.fractions(max_denominator=50))
def test_evaluations_agree_over_commutative_ring(cs, r):
    f = Polynomial(cs, QQ)
    assert evaluate_left(f, r) == evaluate_right(f, r) == naive_eval(f, r)


def test_commutes_with_coeffs():
    rng = random.Random(3)
    f = random_matrix_poly(rng, 2, 3)
    assert commutes_with_coeffs(M2.one, f)
    A = SquareMatrix([[1, 2], [3, 4]], ZZ)
    lifted = Polynomial([M2.one.scale(c) for c in (-2, -5, 1)], M2)
    assert commutes_with_coeffs(A, lifted)
    # N*M = [[1,0],[0,0]] != M*N = [[0,0],[0,1]]
    assert not commutes_with_coeffs(N, Polynomial.monomial(M, 1, M2))


def test_divide_examples():
    rng = random.Random(11)
    r = random_int_matrix(rng, 3, -5, 5)
    x2 = Polynomial.monomial(M3.one, 2, M3)
    q, rem = divide_right_linear(x2, r)
    assert q == Polynomial((r, M3.one), M3)
    assert rem == r * r
    c = random_int_matrix(rng, 3)
    for div in (divide_right_linear, divide_left_linear):
        q, rem = div(Polynomial.constant(c, M3), r)
        assert q.is_zero() and rem == c
        q, rem = div(Polynomial.zero(M3), r)
        assert q.is_zero() and rem == M3.zero


@given(st.lists(st.fractions(max_denominator=30), max_size=6), st.fractions(max_denominator=30))
def test_divisions_agree_over_commutative_ring(cs, r):
    f = Polynomial(cs, QQ)
    assert divide_left_linear(f, r) == divide_right_linear(f, r)


@pytest.mark.parametrize("seed", range(20))
def test_division_round_trip_matrix_coefficients(seed):
    rng = random.Random(seed)
    f = random_matrix_poly(rng, 3, 5)
    r = random_int_matrix(rng, 3, -5, 5)
    xr = linear_factor(r, M3)
    q, rem = divide_right_linear(f, r)
    assert q * xr + Polynomial.constant(rem, M3) == f
    assert rem == naive_eval(f, r)
    q, rem = divide_left_linear(f, r)
    assert xr * q + Polynomial.constant(rem, M3) == f
    assert rem == naive_eval(f, r, left=True)


def _sample_polys(seed):
    rng = random.Random(seed)
    return [random_matrix_poly(rng, 3, 3, -3, 3) for _ in range(3)], random_int_matrix(rng, 3, -3, 3)


@pytest.mark.parametrize("seed", range(15))
def test_ring_axioms_matrix_coefficients(seed):
    (f, g, h), r = _sample_polys(seed)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h
    assert evaluate_right(f + g, r) == evaluate_right(f, r) + evaluate_right(g, r)


qpolys = st.lists(st.fractions(max_denominator=20), max_size=5).map(lambda cs: Polynomial(cs, QQ))


@given(qpolys, qpolys, qpolys)
@settings(max_examples=60)
def test_ring_axioms_rational(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f


@given(qpolys, qpolys)
def test_degree_of_product_rational(f, g):
    p = f * g
    if f.is_zero() or g.is_zero():
        assert p.is_zero()
    else:
        assert p.degree == f.degree + g.degree


@pytest.mark.parametrize("seed", range(15))
def test_degree_of_product_matrix(seed):
    (f, g, _), _ = _sample_polys(seed)
    p = f * g
    if f.is_zero() or g.is_zero():
        assert p.is_zero()
        return
    assert p.is_zero() or p.degree <= f.degree + g.degree
    if not (f.leading_coefficient() * g.leading_coefficient()).is_zero():
        assert p.degree == f.degree + g.degree


@pytest.mark.parametrize("seed", range(15))
def test_guarded_evaluation_multiplicative(seed):
    (g, h, u), _ = _sample_polys(seed)
    rng = random.Random(1000 + seed)
    r = M3.one.scale(rng.randint(-4, 4))
    assert commutes_with_coeffs(r, h)
    f = g * h + u
    assert evaluate_right(f, r) == evaluate_right(g, r) * evaluate_right(h, r) + evaluate_right(u, r)


def test_unguarded_evaluation_can_fail():
    g = Polynomial.constant(N, M2)
    h = Polynomial.x(M2)
    r = M
    # h = x has central coefficients, so evaluation respects g*h = N x
    assert evaluate_right(g * h, r) == evaluate_right(g, r) * evaluate_right(h, r)
    g2 = Polynomial.x(M2)
    h2 = Polynomial.constant(N, M2)
    assert not commutes_with_coeffs(r, h2) and not commutes_with_coeffs(r, g2 * h2)
    # (x)(N) = N x, evaluated: N M = [[1,0],[0,0]]; product of evaluations: M N = [[0,0],[0,1]]
    assert evaluate_right(g2 * h2, r) != evaluate_right(g2, r) * evaluate_right(h2, r)


def test_format_poly():
    assert format_poly(qpoly(-2, -5, 1)) == "x^2 - 5x - 2"
    assert format_poly(qpoly(0, 0, 0, 1)) == "x^3"
    assert format_poly(qpoly(F(1, 2), -1)) == "-x + 1/2"
    assert format_poly(qpoly(0, F(-3, 4), 2)) == "2x^2 - (3/4)x"
    assert format_poly(Polynomial.zero(QQ)) == "0"
    assert format_poly(Polynomial.monomial(N, 1, M2)) == "([[0,1],[0,0]])·x"
