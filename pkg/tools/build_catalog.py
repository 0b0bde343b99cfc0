"""Regenerate src/nonic_theta/data/catalog.json from readable Python."""

import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "nonic_theta" / "data" / "catalog.json"


def add(*a): return ["add", *a]
def mul(*a): return ["mul", *a]
def sub(a, b): return ["sub", a, b]
def div(a, b): return ["div", a, b]
def neg(a): return ["neg", a]
def pw(a, e): return ["pow", a, e]
def sqrt(a): return ["sqrt", a]
def cbrt(a): return ["cbrt", a]
def cos(r): return ["cos", r]
def sin(r): return ["sin", r]
def phi(n): return ["phi", n]
def v(name): return ["var", name]


R3 = sqrt(3)
T = cbrt(2)
T2 = pw(2, "2/3")
C1, C2, C4 = cos("1/9"), cos("2/9"), cos("4/9")
S1, S2, S4 = sin("1/9"), sin("2/9"), sin("4/9")
G81_RADICAL = div(add(cbrt(mul(2, add(R3, 1))), 1), sub(cbrt(mul(2, sub(R3, 1))), 1))


def five_term(scale):
    """scale * (1 + (beta p/alpha)^(1/3) + (gamma p/beta)^(1/3) + u3 + (alpha p/gamma)^(1/3))."""
    return mul(scale, add(1,
                          cbrt(div(mul(v("beta"), v("p")), v("alpha"))),
                          cbrt(div(mul(v("gamma"), v("p")), v("beta"))),
                          v("u3"),
                          cbrt(div(mul(v("alpha"), v("p")), v("gamma")))))


CUBIC = {"p": "p", "u3": "u3", "roots": ["alpha", "beta", "gamma"]}

examples = [
    {
        "id": "thm-1.2",
        "title": "septic: phi(e^{-7 pi sqrt7}) / phi(e^{-pi sqrt7})",
        "n": None,
        "lhs": div(phi("343"), phi("7")),
        "defs": {},
        "rhs": mul(pw(7, "-3/4"), add(
            1,
            pw(div(cos("1/7"), mul(2, pw(cos("2/7"), 2))), "2/7"),
            pw(div(cos("2/7"), mul(2, pw(cos("3/7"), 2))), "2/7"),
            pw(div(cos("3/7"), mul(2, pw(cos("1/7"), 2))), "2/7"))),
    },
    {
        "id": "thm-1.3-i",
        "title": "radical form of phi(e^{-27 pi}) / phi(e^{-3 pi})",
        "n": "1/9",
        "lhs": div(phi("729"), phi("9")),
        "defs": {"R": G81_RADICAL},
        "rhs": div(add(1, mul(sub(R3, 1), cbrt(v("R")))), 3),
        "same_value_as": "thm-4.10",
    },
    {
        "id": "thm-1.3-ii",
        "title": "radical form of phi(e^{-9 pi sqrt3}) / phi(e^{-3 pi sqrt3})",
        "n": "1/3",
        "lhs": div(phi("243"), phi("27")),
        "defs": {},
        "rhs": div(add(1, cbrt(div(2, sub(T, 1)))), mul(pw(3, "1/4"), add(1, T))),
        "same_value_as": "thm-4.11",
    },
    {
        "id": "thm-1.3-iii",
        "title": "radical form of phi(e^{-27 pi sqrt3}) / phi(e^{-pi sqrt3})",
        "n": "1/27",
        "lhs": div(phi("2187"), phi("3")),
        "defs": {},
        "rhs": mul(div(add(1, T), pw(3, "7/4")),
                   add(1, div(mul(T, sub(T, 1), add(T, T2, cbrt(3))),
                              cbrt(sub(9, mul(2, pw(3, "4/3"))))))),
        "same_value_as": "thm-4.12",
    },
    {
        "id": "thm-1.3-iv",
        "title": "radical form of phi(e^{-81 pi}) / phi(e^{-pi})",
        "n": "1/81",
        "lhs": div(phi("6561"), phi("1")),
        "defs": {"A": cbrt(mul(2, add(R3, 1))), "R": G81_RADICAL},
        "rhs": mul(div(add(1, v("A")), 9),
                   add(1, mul(T, pw(div(1, v("R")), "8/9"),
                              cbrt(sub(div(mul(3, add(R3, 1)), sub(add(R3, 1), cbrt(v("R")))), 2))))),
        "same_value_as": "thm-4.13",
    },
    {
        "id": "thm-4.10",
        "title": "phi(e^{-27 pi}) / phi(e^{-3 pi}), trigonometric form",
        "n": "1/9",
        "lhs": div(phi("729"), phi("9")),
        "defs": {
            "p": cbrt(mul(16, sub(mul(11, R3), 19))),
            "u3": sub(R3, 1),
            "alpha": mul(2, sub(R3, 1), add(sub(1, C1), mul(sub(2, R3), S1))),
            "beta": mul(2, sub(R3, 1), sub(add(1, mul(sub(2, R3), C1)), S1)),
            "gamma": mul(2, sub(R3, 1), add(1, mul(sub(R3, 1), add(C1, S1)))),
        },
        "rhs": div(add(1, mul(div(pw(mul(16, sub(mul(11, R3), 19)), "1/9"), R3),
                              add(cbrt(add(1, div(R3, mul(2, C4)))),
                                  cbrt(add(1, div(R3, mul(2, C2)))),
                                  cbrt(sub(1, div(R3, mul(2, C1))))))), 3),
        "cubic": CUBIC,
        "pipeline": {"scale": div(1, mul(3, R3))},
    },
    {
        "id": "thm-4.11",
        "title": "phi(e^{-9 pi sqrt3}) / phi(e^{-3 pi sqrt3}), trigonometric form",
        "n": "1/3",
        "lhs": div(phi("243"), phi("27")),
        "defs": {
            "p": mul(2, pw(sub(T, 1), 2)),
            "a": mul(2, sqrt(sub(T2, 1))),
            "u3": mul(T, sub(T, 1)),
            "alpha": mul(sqrt(mul(2, v("p"))), sub(1, mul(v("a"), S2))),
            "beta": mul(sqrt(mul(2, v("p"))), sub(1, mul(v("a"), S1))),
            "gamma": mul(sqrt(mul(2, v("p"))), add(1, mul(v("a"), S4))),
        },
        "rhs": mul(pw(3, "-5/4"), add(
            1,
            cbrt(mul(v("p"), div(sub(1, mul(v("a"), S1)), sub(1, mul(v("a"), S2))))),
            cbrt(mul(v("p"), div(add(1, mul(v("a"), S4)), sub(1, mul(v("a"), S1))))),
            sub(T2, T),
            cbrt(mul(v("p"), div(sub(1, mul(v("a"), S2)), add(1, mul(v("a"), S4))))))),
        "cubic": CUBIC,
        "pipeline": {"scale": pw(3, "-5/4")},
    },
    {
        "id": "thm-4.12",
        "title": "phi(e^{-27 pi sqrt3}) / phi(e^{-pi sqrt3}), trigonometric form",
        "n": "1/27",
        "lhs": div(phi("2187"), phi("3")),
        "defs": {
            "p": mul(2, cbrt(add(1, T, T2))),
            "a": mul(2, sub(T, 1)),
            "b": div(mul(2, pw(add(1, T), 2)), 3),
            "u3": T,
            "alpha": mul(v("b"), sub(1, mul(v("a"), C1))),
            "beta": mul(v("b"), add(1, mul(v("a"), C4))),
            "gamma": mul(v("b"), add(1, mul(v("a"), C2))),
        },
        "rhs": mul(pw(3, "-7/4"), add(
            1,
            cbrt(mul(v("p"), div(add(1, mul(v("a"), C4)), sub(1, mul(v("a"), C1))))),
            cbrt(mul(v("p"), div(add(1, mul(v("a"), C2)), add(1, mul(v("a"), C4))))),
            T,
            cbrt(mul(v("p"), div(sub(1, mul(v("a"), C1)), add(1, mul(v("a"), C2))))))),
        "cubic": CUBIC,
        "pipeline": {"scale": pw(3, "-7/4")},
    },
    {
        "id": "thm-4.13",
        "title": "phi(e^{-81 pi}) / phi(e^{-pi})",
        "n": "1/81",
        "lhs": div(phi("6561"), phi("1")),
        "defs": {
            "A": cbrt(mul(2, add(R3, 1))),
            "B": cbrt(mul(2, sub(R3, 1))),
            "p": mul(2, cbrt(mul(2, sub(R3, 1), div(add(v("A"), 1), sub(v("B"), 1))))),
            "u3": v("A"),
            "a": add(mul(2, v("A")), pw(v("A"), 2), R3, 1),
            "b": mul(2, sub(v("A"), v("B"))),
            # printed with "- sqrt3 - 1"; "+ sqrt3 - 1" is what makes alpha, gamma roots of r
            "c": mul(2, add(sub(v("B"), v("A")), sub(R3, 1))),
            "d": mul(2, sub(R3, 1)),
            "alpha": mul("2/3", sub(sub(v("a"), mul(v("b"), C1)), mul(v("c"), C2))),
            "beta": mul("2/3", sub(add(v("a"), mul(v("d"), C1)), mul(v("b"), C2))),
            "gamma": mul("2/3", add(sub(v("a"), mul(v("c"), C1)), mul(v("d"), C2))),
        },
        "rhs": five_term("1/9"),
        "cubic": CUBIC,
        "pipeline": {"scale": "1/9"},
        "erratum": {"c": mul(2, sub(sub(sub(v("B"), v("A")), R3), 1))},
    },
    {
        "id": "thm-4.14",
        "title": "phi(e^{-81 pi sqrt3}) / phi(e^{-pi sqrt3})",
        "n": "1/243",
        "lhs": div(phi("19683"), phi("3")),
        "defs": {
            "t": T,
            "s": cbrt(3),
            "p": div(mul(2, add(T, T2, v("s")), cbrt(sub(T, 1))), cbrt(sub(9, mul(2, pw(3, "4/3"))))),
            "u3": cbrt(mul(2, add(1, T, T2))),
            "a": add(mul(4, T, pw(3, "2/3"), add(1, T)),
                     mul(2, v("s"), pw(add(T, T2), 2)),
                     mul(6, add(1, T, T2))),
            "b": mul(4, sub(add(1, mul(v("s"), add(v("s"), 1))),
                            mul(2, T, sub(add(v("s"), T), 1)))),
            "c": mul(4, sub(1, mul(T, sub(v("s"), 1), sub(add(v("s"), T), 1)))),
            "d": mul(4, sub(mul(sub(2, T), add(1, T)),
                            mul(v("s"), sub(T, 1), add(1, T, v("s"))))),
            "alpha": mul("1/9", sub(sub(v("a"), mul(v("b"), C1)), mul(v("c"), C2))),
            "beta": mul("1/9", sub(add(v("a"), mul(v("d"), C1)), mul(v("b"), C2))),
            "gamma": mul("1/9", add(sub(v("a"), mul(v("c"), C1)), mul(v("d"), C2))),
        },
        "rhs": five_term("1/9"),
        "cubic": CUBIC,
        "pipeline": {"scale": "1/9"},
    },
]

SIN_A = mul(2, sqrt(sub(T2, 1)))
COS_A = mul(2, sub(T, 1))


def ratio(x, y):
    return div(x, y)


def sin_terms():
    a = v("a")
    x1 = sub(1, mul(a, S1))
    x2 = sub(1, mul(a, S2))
    x4 = add(1, mul(a, S4))
    return x1, x2, x4


def cos_terms():
    a = v("a")
    y1 = sub(1, mul(a, C1))
    y2 = add(1, mul(a, C2))
    y4 = add(1, mul(a, C4))
    return y1, y2, y4


X1, X2, X4 = sin_terms()
Y1, Y2, Y4 = cos_terms()
E27 = {
    "alpha": mul(2, sub(R3, 1), add(sub(1, C1), mul(sub(2, R3), S1))),
    "beta": mul(2, sub(R3, 1), sub(add(1, mul(sub(2, R3), C1)), S1)),
    "gamma": mul(2, sub(R3, 1), add(1, mul(sub(R3, 1), add(C1, S1)))),
}

trig = [
    {"id": "trig-cos-sum", "title": "cos 2pi/9 + cos 4pi/9 = cos pi/9",
     "defs": {}, "lhs": add(C2, C4), "rhs": C1},
    {"id": "trig-sec-sum", "title": "1/cos 4pi/9 + 1/cos 2pi/9 = 1/cos pi/9 + 6",
     "defs": {}, "lhs": add(div(1, C4), div(1, C2)), "rhs": add(div(1, C1), 6)},
    {"id": "trig-sqrt3-reciprocal", "title": "1/(2cos 2pi/9 + sqrt3) + 1/(2cos 4pi/9 + sqrt3) = 1/(2cos pi/9 - sqrt3) - 6",
     "defs": {}, "lhs": add(div(1, add(mul(2, C2), R3)), div(1, add(mul(2, C4), R3))),
     "rhs": sub(div(1, sub(mul(2, C1), R3)), 6)},
    {"id": "trig-u1-form", "title": "1 + sqrt3/(2cos 4pi/9) = 1 + sqrt3 + 2sqrt3 cos pi/9",
     "defs": {}, "lhs": add(1, div(R3, mul(2, C4))), "rhs": add(1, R3, mul(2, R3, C1))},
    {"id": "trig-u2-form", "title": "1 + sqrt3/(2cos 2pi/9) = 1 + sqrt3 - 2sqrt3 cos 4pi/9",
     "defs": {}, "lhs": add(1, div(R3, mul(2, C2))), "rhs": sub(add(1, R3), mul(2, R3, C4))},
    {"id": "trig-u4-form", "title": "1 - sqrt3/(2cos pi/9) = 1 + sqrt3 - 2sqrt3 cos 2pi/9",
     "defs": {}, "lhs": sub(1, div(R3, mul(2, C1))), "rhs": sub(add(1, R3), mul(2, R3, C2))},
    {"id": "trig-cos-7pi36", "title": "cos 7pi/36 via pi/12 and pi/9",
     "defs": {}, "lhs": cos("7/36"),
     "rhs": div(sub(C1, mul(sub(2, R3), S1)), mul(sqrt(2), sub(R3, 1)))},
    {"id": "trig-e27-ratio-ba", "title": "beta/alpha = 1 + sqrt3/(2cos 4pi/9) for the e^{-27pi} roots",
     "defs": E27, "lhs": div(v("beta"), v("alpha")), "rhs": add(1, div(R3, mul(2, C4)))},
    {"id": "trig-e27-ratio-cb", "title": "gamma/beta = 1 + sqrt3/(2cos 2pi/9) for the e^{-27pi} roots",
     "defs": E27, "lhs": div(v("gamma"), v("beta")), "rhs": add(1, div(R3, mul(2, C2)))},
    {"id": "trig-e27-ratio-ac", "title": "alpha/gamma = 1 - sqrt3/(2cos pi/9) for the e^{-27pi} roots",
     "defs": E27, "lhs": div(v("alpha"), v("gamma")), "rhs": sub(1, div(R3, mul(2, C1)))},
    {"id": "trig-sin-ratio-sum", "title": "cyclic sine ratios sum to (1 + 2^{1/3})^3 (2 + 2^{1/3})",
     "defs": {"a": SIN_A}, "lhs": add(ratio(X1, X2), ratio(X4, X1), ratio(X2, X4)),
     "rhs": mul(pw(add(1, T), 3), add(2, T))},
    {"id": "trig-cos-ratio-sum", "title": "cyclic cosine ratios sum to 3 * 2^{1/3}",
     "defs": {"a": COS_A}, "lhs": add(ratio(Y4, Y1), ratio(Y2, Y4), ratio(Y1, Y2)),
     "rhs": mul(3, T)},
    {"id": "trig-sin-ratio-reciprocal", "title": "reversed sine ratios sum to 3/(2^{1/3} - 1)^3",
     "defs": {"a": SIN_A}, "lhs": add(ratio(X2, X1), ratio(X1, X4), ratio(X4, X2)),
     "rhs": div(3, pw(sub(T, 1), 3))},
    {"id": "trig-cos-ratio-reciprocal", "title": "reversed cosine ratios sum to 9/(2^{1/3} + 1)",
     "defs": {"a": COS_A}, "lhs": add(ratio(Y1, Y4), ratio(Y4, Y2), ratio(Y2, Y1)),
     "rhs": div(9, add(T, 1))},
    {"id": "trig-cube-sum-e27", "title": "cube roots of the e^{-27pi} ratios against G_81",
     "defs": {}, "lhs": add(cbrt(add(1, div(R3, mul(2, C4)))), cbrt(add(1, div(R3, mul(2, C2)))),
                            cbrt(sub(1, div(R3, mul(2, C1))))),
     "rhs": mul(R3, pw(sub(7, mul(4, R3)), "1/9"), cbrt(G81_RADICAL))},
    {"id": "trig-cube-sum-sin", "title": "cube roots of the sine ratios sum to (2^{1/3} + 1)^2",
     "defs": {"a": SIN_A}, "lhs": add(cbrt(ratio(X1, X2)), cbrt(ratio(X4, X1)), cbrt(ratio(X2, X4))),
     "rhs": pw(add(T, 1), 2)},
    {"id": "trig-cube-sum-cos", "title": "cube roots of the cosine ratios",
     "defs": {"a": COS_A}, "lhs": add(cbrt(ratio(Y4, Y1)), cbrt(ratio(Y2, Y4)), cbrt(ratio(Y1, Y2))),
     "rhs": div(mul(cbrt(3), pw(sub(T, 1), "4/9"), add(T, cbrt(sub(T, 1)))),
                cbrt(sub(3, mul(2, cbrt(3)))))},
    {"id": "rel-g9-degree7", "title": "sqrt2 G9^7 - (2 - sqrt3) G9^6 - 2 sqrt3 G9^4 + sqrt2 G9 + 1 = 0",
     "defs": {"g": ["G", "9"]},
     "lhs": add(mul(sqrt(2), pw(v("g"), 7)), neg(mul(sub(2, R3), pw(v("g"), 6))),
                neg(mul(2, R3, pw(v("g"), 4))), mul(sqrt(2), v("g")), 1),
     "rhs": 0},
]

gamma = [
    {"id": "gamma-phi1-a", "title": "phi(e^{-pi}) = pi^{1/4} / Gamma(3/4)",
     "defs": {}, "lhs": phi("1"), "rhs": div(pw(["pi"], "1/4"), ["gamma", "3/4"])},
    {"id": "gamma-phi1-b", "title": "phi(e^{-pi}) = Gamma(1/4) / (sqrt2 pi^{3/4})",
     "defs": {}, "lhs": phi("1"), "rhs": div(["gamma", "1/4"], mul(sqrt(2), pw(["pi"], "3/4")))},
    {"id": "gamma-phi1-ab", "title": "the two Gamma forms of phi(e^{-pi}) agree",
     "defs": {}, "lhs": div(pw(["pi"], "1/4"), ["gamma", "3/4"]),
     "rhs": div(["gamma", "1/4"], mul(sqrt(2), pw(["pi"], "3/4")))},
    {"id": "gamma-phi3", "title": "phi(e^{-pi sqrt3}) = 3^{1/8} Gamma(1/3)^{3/2} / (2^{2/3} pi)",
     "defs": {}, "lhs": phi("3"),
     "rhs": div(mul(pw(3, "1/8"), pw(["gamma", "1/3"], "3/2")), mul(T2, ["pi"]))},
]

if __name__ == "__main__":
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps({"version": 1, "examples": examples, "trig": trig, "gamma": gamma}, indent=1) + "\n")
    print(f"wrote {OUT}")
