from fractions import Fraction

import pytest

from nonic_theta.expr import OPERATIONS, ExpressionError, evaluate, evaluate_defs
from nonic_theta.hpreal import context_for, hp, residual_bound

CTX = context_for(30)
TOL = Fraction(1, 10**30)


def val(node, env=None):
    return evaluate(node, CTX, env)


def test_literals_are_exact():
    assert val("3/7").mid == hp(Fraction(3, 7), CTX).mid
    assert val(5).rad == 0


def test_arithmetic():
    assert residual_bound(val(["sub", ["mul", 2, "1/3"], ["div", 1, 3]]), val("1/3")) < TOL
    assert residual_bound(val(["add", 1, 2, 3, ["neg", 6]]), val(0)) < TOL


def test_roots_and_powers():
    assert residual_bound(val(["pow", 8, "2/3"]), val(4)) < TOL
    assert residual_bound(val(["cbrt", -27]), val(-3)) < TOL
    assert residual_bound(val(["root", 32, 5]), val(2)) < TOL
    assert residual_bound(val(["mul", ["sqrt", 3], ["sqrt", 3]]), val(3)) < TOL


def test_trig_uses_multiples_of_pi():
    assert residual_bound(val(["cos", "1/3"]), val("1/2")) < TOL
    assert residual_bound(val(["sin", "1/6"]), val("1/2")) < TOL


def test_bindings_are_ordered():
    env = evaluate_defs({"a": 2, "b": ["mul", ["var", "a"], 3]}, CTX)
    assert residual_bound(env["b"], val(6)) < TOL
    assert residual_bound(val(["let", {"x": 4}, ["sqrt", ["var", "x"]]]), val(2)) < TOL


def test_phi_and_invariants():
    r3 = val(["sqrt", 3])
    g9 = val(["G", "9"])
    assert residual_bound(g9 ** 6, 2 + r3) < TOL
    assert val(["phi", "1"]).mid > 1


@pytest.mark.parametrize("node", [[], ["nope", 1], ["var", "missing"], {"add": 1}])
def test_malformed(node):
    with pytest.raises(ExpressionError):
        val(node)


def test_operation_list():
    assert {"add", "phi", "G", "gamma", "let"} <= set(OPERATIONS)
