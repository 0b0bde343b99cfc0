from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonic_theta.puiseux import (
    INF,
    QSeries,
    chi_series,
    frac,
    frac_filter,
    phi_series,
    pochhammer_inf,
    qs_compare,
    qs_inv,
    qs_scale_q,
    theta_f,
)

F = Fraction


def S(*terms, order=INF):
    return QSeries(terms, order)


# random series on the 1/9 grid with a finite order
exps = st.integers(min_value=0, max_value=36).map(lambda k: F(k, 9))
coeffs = st.integers(min_value=-5, max_value=5)
orders = st.integers(min_value=10, max_value=45).map(lambda k: F(k, 9))


@st.composite
def series(draw):
    terms = draw(st.lists(st.tuples(exps, coeffs), max_size=8))
    return QSeries(terms, draw(orders))


@st.composite
def units(draw):
    s = draw(series())
    return QSeries(list(s.items()) + [(0, draw(st.sampled_from([1, -1, 2])))], s.order) if s.coeff(0) == 0 else s


def agree(a, b):
    return qs_compare(a, b).agrees


# ----------------------------------------------------------- examples
def test_add_cancels():
    assert S((0, 1), (1, 2)) + S((1, -2), (2, 1)) == S((0, 1), (2, 1))


def test_phi_minus_one():
    assert phi_series(10) - 1 == S((1, 2), (4, 2), (9, 2), order=10)


def test_mul_examples():
    assert S((0, 1), (1, 1)) * S((0, 1), (1, -1)) == S((0, 1), (2, -1))
    third = F(1, 9)
    assert S((0, 1), (third, 1)) ** 2 == S((0, 1), (third, 2), (2 * third, 1))


def test_inverse_examples():
    geo = qs_inv(S((0, 1), (1, -1), order=6))
    assert geo == QSeries([(k, 1) for k in range(6)], 6)
    assert qs_inv(S((1, 2))) == S((-1, F(1, 2)))
    inv9 = qs_inv(qs_scale_q(phi_series(F(30, 9)), 9))
    assert [inv9.coeff(e) for e in (0, 9, 18, 27)] == [1, -2, 4, -8]


def test_scale_q():
    assert qs_scale_q(S((0, 1), (1, 2)), F(1, 9)) == S((0, 1), (F(1, 9), 2))
    direct = QSeries([(9 * n * n, 1) for n in range(-3, 4)], 90)
    assert qs_scale_q(phi_series(10), 9) == direct


@pytest.mark.parametrize(
    "x, y, order, expected",
    [
        (1, 1, 10, {0: 1, 1: 2, 4: 2, 9: 2}),
        (11, 7, 41, {0: 1, 7: 1, 11: 1, 32: 1, 40: 1}),
        (15, 3, 25, {0: 1, 3: 1, 15: 1, 24: 1}),
    ],
)
def test_theta_f(x, y, order, expected):
    assert theta_f(x, y, order).terms == {F(e): c for e, c in expected.items()}


def test_pochhammer_examples():
    chi = pochhammer_inf(1, 2, 10, sign=1)
    assert chi.terms == {F(e): c for e, c in {0: 1, 1: 1, 3: 1, 4: 1, 5: 1, 6: 1, 7: 1, 8: 2, 9: 2}.items()}
    euler = pochhammer_inf(1, 1, 8, sign=-1)
    assert euler.terms == {F(0): 1, F(1): -1, F(2): -1, F(5): 1, F(7): 1}
    assert pochhammer_inf(5, 1, 3).terms == {F(0): 1}


def test_frac_filter():
    s = S((F(1, 3), 1), (1, 2), (F(4, 3), 1), (2, 1))
    assert frac_filter(s, F(1, 3)) == S((F(1, 3), 1), (F(4, 3), 1))
    ints = phi_series(20)
    assert frac_filter(ints, 0) == ints


def test_compare_reports_first_mismatch():
    diff = qs_compare(S((0, 1), (1, 1)), S((0, 1), (1, 2)))
    assert not diff.agrees
    assert diff.first_mismatch_exponent == 1 and (diff.lhs_coeff, diff.rhs_coeff) == (1, 2)
    assert qs_compare(phi_series(9), phi_series(9)).agrees


@pytest.mark.parametrize("order", [5, 17, 40])
def test_phi_product_form(order):
    # phi(q) = (-q; q^2)^2 (q^2; q^2)
    prod = chi_series(order) ** 2 * pochhammer_inf(2, 2, order)
    assert agree(phi_series(order), prod)


def test_frac_parsing():
    assert frac("3/9") == F(1, 3)
    assert frac(7) == F(7)
    with pytest.raises((ValueError, ZeroDivisionError)):
        frac("1/0")


def test_json_round_trip():
    s = S((F(1, 9), 2), (F(7, 3), F(-5, 4)), order=F(25, 9))
    assert QSeries.from_json(s.to_json()) == s


# --------------------------------------------------------- properties
@settings(max_examples=60, deadline=None)
@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert agree(a + b, b + a)
    assert agree(a * b, b * a)
    assert agree((a + b) + c, a + (b + c))
    assert agree((a * b) * c, a * (b * c))
    assert agree(a * (b + c), a * b + a * c)
    assert agree(a - a, QSeries.zero())


@settings(max_examples=60, deadline=None)
@given(units())
def test_inverse(u):
    prod = u * qs_inv(u)
    assert agree(prod, QSeries.constant(1))


@settings(max_examples=40, deadline=None)
@given(series(), st.sampled_from([F(1, 3), F(1, 9), 3, 9]))
def test_scale_q_is_ring_map(a, m):
    sq = qs_scale_q(a * a, m)
    assert agree(sq, qs_scale_q(a, m) ** 2)


@settings(max_examples=40, deadline=None)
@given(series())
def test_filters_partition(a):
    parts = [frac_filter(a, F(k, 9)) for k in range(9)]
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    assert agree(total, a)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 20), st.integers(1, 20), st.integers(10, 50))
def test_triple_product_property(x, y, order):
    s = x + y
    prod = pochhammer_inf(x, s, order, 1) * pochhammer_inf(y, s, order, 1) * pochhammer_inf(s, s, order, -1)
    assert agree(theta_f(x, y, order), prod)


@settings(max_examples=30, deadline=None)
@given(series())
def test_truncation_commutes_with_product(a):
    cut = a.order - F(1, 9) if a.order != INF else F(3)
    assert agree((a * a).truncate(cut), a.truncate(cut) * a.truncate(cut))
