from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from cayley_birkhoff.exact_arith import (
    QQ, ZZ, format_rational, parse_rational, rat_add, rat_cmp, rat_mul,
)

rationals = st.fractions(max_denominator=10**6)


def test_rat_add_examples():
    assert rat_add(F(1, 3), F(1, 6)) == F(1, 2)
    assert rat_add(F(0), F(5, 7)) == F(5, 7)
    z = rat_add(F(2, 3), F(-2, 3))
    assert (z.numerator, z.denominator) == (0, 1)


def test_rat_mul_examples():
    assert rat_mul(F(2, 3), F(3, 4)) == F(1, 2)
    assert rat_mul(F(1), F(5, 7)) == F(5, 7)
    assert rat_mul(F(-1, 2), F(-1, 2)) == F(1, 4)


def test_rat_cmp_examples():
    assert rat_cmp(F(1, 3), F(1, 2)) == -1
    assert rat_cmp(F(2, 4), F(1, 2)) == 0
    assert rat_cmp(F(-1, 5), F(0)) == -1


@given(rationals, rationals, rationals)
def test_field_laws(a, b, c):
    assert rat_add(rat_add(a, b), c) == rat_add(a, rat_add(b, c))
    assert rat_mul(rat_mul(a, b), c) == rat_mul(a, rat_mul(b, c))
    assert rat_add(a, b) == rat_add(b, a)
    assert rat_mul(a, b) == rat_mul(b, a)
    assert rat_mul(a, rat_add(b, c)) == rat_add(rat_mul(a, b), rat_mul(a, c))


@given(rationals, rationals)
def test_results_canonical(a, b):
    from math import gcd
    for r in (rat_add(a, b), rat_mul(a, b)):
        assert r.denominator > 0
        assert gcd(abs(r.numerator), r.denominator) == 1
        assert F(r.numerator, r.denominator) == r


@given(rationals, rationals, rationals)
def test_cmp_order(a, b, c):
    assert rat_cmp(a, b) == -rat_cmp(b, a)
    if rat_cmp(a, b) <= 0 and rat_cmp(b, c) <= 0:
        assert rat_cmp(a, c) <= 0


@given(rationals)
def test_text_round_trip(a):
    assert parse_rational(format_rational(a)) == a


@pytest.mark.parametrize("text, value", [
    ("-3/7", F(-3, 7)), ("2", F(2)), ("4/8", F(1, 2)), (" 1 / 3 ", F(1, 3)),
])
def test_parse(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["0.5", "1e3", "1/0", "6/-1", "", "x", 0.5, True, None])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_format():
    assert format_rational(F(-3, 7)) == "-3/7"
    assert format_rational(F(4, 2)) == "2"
    assert format_rational(0) == "0"


def test_ring_descriptors():
    assert ZZ.commutative and QQ.commutative
    assert QQ.one * F(3, 4) == F(3, 4) and QQ.zero + F(3, 4) == F(3, 4)
