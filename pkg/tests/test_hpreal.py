from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from nonic_theta.hpreal import (
    HighPrecisionReal,
    _exact_fraction,
    context_for,
    cos_pi,
    hp,
    residual_bound,
)

CTX = context_for(20)
rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**6)


def encloses(ball, exact: Fraction) -> bool:
    return _exact_fraction(ball.lower) <= exact <= _exact_fraction(ball.upper)


@settings(max_examples=200, deadline=None)
@given(rationals, rationals)
def test_field_ops_enclose_exact_result(a, b):
    x, y = hp(a, CTX), hp(b, CTX)
    assert encloses(x + y, a + b)
    assert encloses(x - y, a - b)
    assert encloses(x * y, a * b)
    if b != 0:
        assert encloses(x / y, a / b)


@settings(max_examples=100, deadline=None)
@given(st.fractions(min_value=Fraction(1, 10**4), max_value=10**6, max_denominator=10**4))
def test_roots_enclose(a):
    s = hp(a, CTX).sqrt()
    assert _exact_fraction(s.lower) ** 2 <= a <= _exact_fraction(s.upper) ** 2
    c = hp(-a, CTX).cbrt()
    assert _exact_fraction(c.lower) ** 3 <= -a <= _exact_fraction(c.upper) ** 3


@settings(max_examples=100, deadline=None)
@given(rationals, st.integers(0, 9))
def test_integer_powers(a, n):
    assert encloses(hp(a, CTX) ** n, a**n)


@settings(max_examples=50, deadline=None)
@given(rationals, rationals)
def test_residual_bound_is_an_upper_bound(a, b):
    assume(a != b)
    assert residual_bound(hp(a, CTX), hp(b, CTX)) >= abs(a - b)


def test_exact_integer_arithmetic_keeps_zero_radius():
    x = hp(3, CTX)
    assert ((x * x - 9) / x).rad == 0


def test_negative_values_keep_sign():
    assert _exact_fraction(CTX.mpf(-1.5)) == Fraction(-3, 2)


def test_division_by_ball_containing_zero():
    fuzzy = HighPrecisionReal(0, 1, CTX)
    with pytest.raises(ZeroDivisionError):
        hp(1, CTX) / fuzzy


def test_sqrt_of_negative():
    with pytest.raises(ValueError):
        hp(-2, CTX).sqrt()


def test_trig_at_rational_multiples_of_pi():
    ctx = context_for(40)
    third = cos_pi(Fraction(1, 3), ctx)
    assert residual_bound(third, hp(Fraction(1, 2), ctx)) < Fraction(1, 10**45)


def test_precision_refines_within_enclosure():
    lo = hp(2, context_for(20)).sqrt()
    hi = hp(2, context_for(60)).sqrt()
    assert encloses(lo, _exact_fraction(hi.mid))
    assert hi.rad < lo.rad
