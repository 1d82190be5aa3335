"""Exact arithmetic in Z[t, t^-1] and Q(t)."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidrep import (
    LaurentPoly,
    RationalFunction,
    laurent_gcd,
    parse_laurent,
    parse_rational,
)
from braidrep.errors import ZeroSpecialization
from braidrep.laurent import ONE, T, ZERO

coeffs = st.integers(min_value=-9, max_value=9)
exps = st.integers(min_value=-4, max_value=4)
polys = st.dictionaries(exps, coeffs, max_size=5).map(LaurentPoly)
points = st.fractions(
    min_value=Fraction(-5), max_value=Fraction(5), max_denominator=6
).filter(lambda q: q != 0)


def test_canonical_form_drops_zero_coefficients():
    p = LaurentPoly({2: 1, 0: 0, -1: 3})
    assert set(p.terms) == {2, -1}
    assert LaurentPoly({0: 0}) == ZERO
    assert LaurentPoly({0: 1}) == ONE


def test_coercion_and_equality():
    assert LaurentPoly.coerce(5) == LaurentPoly({0: 5})
    assert T + 1 == LaurentPoly({1: 1, 0: 1})
    assert 2 * T == T + T
    assert 3 - T == LaurentPoly({0: 3, 1: -1})
    with pytest.raises(TypeError):
        LaurentPoly.coerce(1.5)


@given(polys, polys, polys)
@settings(max_examples=200)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + ZERO == f
    assert f * ONE == f
    assert f - f == ZERO


@given(polys, polys, points)
def test_evaluation_is_a_ring_homomorphism(f, g, t0):
    assert (f + g).evaluate(t0) == f.evaluate(t0) + g.evaluate(t0)
    assert (f * g).evaluate(t0) == f.evaluate(t0) * g.evaluate(t0)


def test_evaluation_rejects_zero():
    with pytest.raises(ZeroSpecialization):
        (T + 1).evaluate(0)


def test_units_are_signed_monomials():
    assert T.is_unit()
    assert (-(T ** -3)).is_unit()
    assert not (T + 1).is_unit()
    assert not LaurentPoly({0: 2}).is_unit()
    assert T.shifted(2) * T.shifted(2).inverse_unit() == ONE
    with pytest.raises(ValueError):
        (T + 1).inverse_unit()


def test_degree_valuation_content_shift():
    p = LaurentPoly({3: 4, -2: 6})
    assert p.degree() == 3
    assert p.valuation() == -2
    assert p.content() == 2
    assert p.shifted(2) == LaurentPoly({5: 4, 0: 6})
    assert ZERO.degree() is None and ZERO.valuation() is None


@given(polys, polys)
def test_exact_division_inverts_multiplication(f, g):
    if g.is_zero():
        with pytest.raises(ZeroDivisionError):
            f.exact_div(g)
    else:
        assert (f * g).exact_div(g) == f


def test_exact_division_rejects_non_multiples():
    with pytest.raises(ValueError):
        (T + 1).exact_div(T - 1)
    with pytest.raises(ValueError):
        ONE.exact_div(LaurentPoly({0: 2}))


def test_gcd_examples():
    f = (T + 1) * (T - 1)
    g = (T + 1) * (T + 2)
    d = laurent_gcd(f, g)
    assert f.exact_div(d) * d == f
    assert g.exact_div(d) * d == g
    assert d.exact_div(T + 1) * (T + 1) == d


@given(polys, polys)
@settings(max_examples=60)
def test_gcd_divides_both_arguments(f, g):
    d = laurent_gcd(f, g)
    if d.is_zero():
        assert f.is_zero() and g.is_zero()
    else:
        assert f.exact_div(d) * d == f
        assert g.exact_div(d) * d == g


@given(polys)
def test_parse_inverts_str(p):
    assert parse_laurent(str(p)) == p


def test_parse_laurent_forms():
    assert parse_laurent("t^2 - 3t + 1") == LaurentPoly({2: 1, 1: -3, 0: 1})
    assert parse_laurent("-t^-1") == LaurentPoly({-1: -1})
    assert parse_laurent("0") == ZERO
    assert parse_laurent("2*t") == LaurentPoly({1: 2})


def test_rational_function_normalization():
    r = RationalFunction(T ** 2 - T, T ** 3)
    assert r.den.valuation() == 0
    assert r.den.terms[0] > 0
    assert r == RationalFunction(T - 1, T ** 2)
    again = RationalFunction(r.num, r.den)
    assert again.num == r.num and again.den == r.den


def test_rational_function_laurent_detection():
    assert RationalFunction(T + 1, T).is_laurent()
    assert RationalFunction(T + 1, T).as_laurent() == ONE + T ** -1
    assert not RationalFunction(ONE, T + 1).is_laurent()
    with pytest.raises(ValueError):
        RationalFunction(ONE, T + 1).as_laurent()


@given(polys, polys, polys, polys)
@settings(max_examples=100)
def test_rational_arithmetic_matches_fraction_arithmetic(a, b, c, d):
    if b.is_zero() or d.is_zero():
        return
    x = RationalFunction(a, b)
    y = RationalFunction(c, d)
    t0 = Fraction(7, 3)
    if b.evaluate(t0) == 0 or d.evaluate(t0) == 0:
        return
    assert (x + y).evaluate(t0) == x.evaluate(t0) + y.evaluate(t0)
    assert (x * y).evaluate(t0) == x.evaluate(t0) * y.evaluate(t0)
    assert (x - y).evaluate(t0) == x.evaluate(t0) - y.evaluate(t0)
    if not y.is_zero() and y.evaluate(t0) != 0:
        assert (x / y).evaluate(t0) == x.evaluate(t0) / y.evaluate(t0)


def test_rational_division_and_powers():
    r = RationalFunction(ONE, T + 1)
    assert r * (T + 1) == RationalFunction.coerce(1)
    assert r ** -1 == RationalFunction.coerce(T + 1)
    with pytest.raises(ZeroDivisionError):
        r / 0


def test_rational_coerce_accepts_fractions():
    half = RationalFunction.coerce(Fraction(1, 2))
    assert half + half == RationalFunction.coerce(1)
    assert parse_rational("(t - 1)/(t + 1)") == RationalFunction(T - 1, T + 1)
