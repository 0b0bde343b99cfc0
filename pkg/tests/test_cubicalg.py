import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonic_theta import cubicalg as ca
from nonic_theta import numeric as nm
from nonic_theta.hpreal import context_for, cos_pi, hp, residual_bound
from nonic_theta.verify import entry356_samples

F = Fraction
D = 40
CTX = context_for(D)
TOL = F(1, 10**D)


def near(a, b, tol=TOL):
    return residual_bound(a, b) < tol


def thm410_data():
    r3 = hp(3, CTX).sqrt()
    return (16 * (11 * r3 - 19)).cbrt(), r3 - 1


def test_factored_cubic():
    roots = ca.solve_cubic_real(ca.Cubic.monic(-6, 11, -6, D), D)
    assert all(near(r, hp(k, CTX)) for r, k in zip(roots, (1, 2, 3)))


def test_power_reduction_cubic():
    roots = ca.solve_cubic_real(ca.Cubic.monic(0, -3, 1, D), D)
    expected = sorted([2 * cos_pi(F(2, 9), CTX), 2 * cos_pi(F(4, 9), CTX), -2 * cos_pi(F(1, 9), CTX)], key=lambda b: b.mid)
    assert all(near(r, e) for r, e in zip(roots, expected))


def test_nonic_cubic_roots_at_e27():
    p, u3 = thm410_data()
    roots = ca.solve_cubic_real(ca.nonic_cubic(u3, p), D)
    s2 = hp(2, CTX).sqrt()
    expected = sorted((2 * u3 * (1 - s2 * u3 * cos_pi(F(k, 36), CTX)) for k in (7, 17, 31)), key=lambda b: b.mid)
    assert all(near(r, e) for r, e in zip(roots, expected))


def test_order_is_permutation_invariant():
    p, u3 = thm410_data()
    roots = ca.solve_cubic_real(ca.nonic_cubic(u3, p), D)
    outs = [ca.order_roots(list(perm), p).as_tuple() for perm in itertools.permutations(roots)]
    for out in outs[1:]:
        assert all(a.mid == b.mid for a, b in zip(out, outs[0]))


def test_u1_closed_form_at_e27():
    p, u3 = thm410_data()
    t = ca.order_roots(ca.solve_cubic_real(ca.nonic_cubic(u3, p), D), p)
    u1, u2, u4 = ca.u124_from_roots(t, p)
    r3 = hp(3, CTX).sqrt()
    assert near(u1, (p * (1 + r3 / (2 * cos_pi(F(4, 9), CTX)))).cbrt())
    assert near(u1 * u2 * u4, p)


def test_ordering_at_one_third():
    p, u3 = nm.p_u3_from_invariants(F(1, 3), D)
    t = ca.order_roots(ca.solve_cubic_real(ca.nonic_cubic(u3, p), D), p)
    u1, u2, u4 = ca.u124_from_roots(t, p)
    assert u1.mid > u2.mid > u4.mid > 0


def test_order_rejects_nonpositive():
    with pytest.raises(ValueError):
        ca.order_roots([hp(-1, CTX), hp(1, CTX), hp(2, CTX)], hp(1, CTX))


def test_order_rejects_unorderable_roots():
    # equal ratios make condition (ii) impossible
    with pytest.raises((ca.NoValidOrder, ca.AmbiguousOrder)):
        ca.order_roots([hp(1, CTX), hp(1, CTX), hp(1, CTX)], hp(1, CTX))


def test_complex_roots_rejected():
    with pytest.raises(ca.NonRealRoots):
        ca.solve_cubic_real(ca.Cubic.monic(0, 1, 1, D), D)


def test_double_root_is_ill_conditioned():
    with pytest.raises(ca.IllConditioned):
        ca.solve_cubic_real(ca.Cubic.monic(-4, 5, -2, D), D)  # (x-1)^2 (x-2)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=50), min_size=3, max_size=3, unique=True))
def test_from_roots_round_trip(rs):
    c = ca.Cubic.from_roots(rs, D)
    found = ca.solve_cubic_real(c, D)
    for r, e in zip(found, sorted(rs)):
        assert near(r, hp(e, CTX), F(1, 10**(D - 5)))


# ------------------------------------------------------------ entry
def test_entry_triple_root():
    res = ca.entry356_check(3, 3, D)
    assert res.passed(D)
    assert near(res.t, hp(6, CTX))
    assert near(res.mu, hp(27, CTX)) and near(res.nu, hp(27, CTX))
    assert near(res.cube_root_sum, hp(3, CTX))


def test_entry_sqrt3_instance():
    r3 = hp(3, CTX).sqrt()
    res = ca.entry356_check(3 * (1 + r3), 3 * (1 + 2 * r3), D)
    g9 = nm.class_invariant(9, D).value
    s2 = hp(2, CTX).sqrt()
    assert res.passed(D)
    assert near(res.cube_root_sum, (3 * s2 * r3 * g9**3 + 9 * s2 * g9 + 9 * g9**2).cbrt())


@pytest.mark.parametrize("a, b", entry356_samples(20, seed=7))
def test_entry_random_cubics(a, b):
    assert ca.entry356_check(a, b, D).passed(D)


def test_entry_detects_wrong_closed_form(monkeypatch):
    orig = ca.entry356_closed_form
    monkeypatch.setattr(ca, "entry356_closed_form", lambda a, b: orig(a, b) + F(1, 10**20))
    assert not ca.entry356_check(5, 6, D).passed(D)


# ---------------------------------------------------------- restated
def test_restated_at_e27():
    p, u3 = thm410_data()
    rv = ca.nonic_restated_eval(u3, p, D)
    ratio = nm.phi_exp(729, D) / nm.phi_exp(9, D)
    assert near(rv.value, 3 * hp(3, CTX).sqrt() * ratio)
    assert near((rv.value - 1 - u3) ** 3 / p, rv.y)
    assert rv.selector == "closed-form"


def test_restated_at_tenth_matches_series():
    q = hp(F(1, 10), CTX)
    u3, p = nm.eval_u(3, q, D), nm.eval_p(q, D)
    direct = nm.eval_phi(q ** F(1, 9), D) / nm.eval_phi(q**9, D)
    assert near(ca.nonic_restated_eval(u3, p, D).value, direct, F(1, 10**30))
