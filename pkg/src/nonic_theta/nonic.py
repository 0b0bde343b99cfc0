"""Nonic theta objects and formal verification of their identities.

Every check compares two truncated series below their common guaranteed
order.  Identities that involve cube roots or rational functions are tested
in cubed, denominator-cleared polynomial form; the form used is stored in the
report.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .puiseux import (
    QSeries,
    chi_series,
    frac,
    frac_filter,
    phi_series,
    qs_compare,
    qs_inv,
    qs_mul,
    qs_scale_q,
    theta_f,
)
from .report import CheckReport, formal_report

DEFAULT_ORDER = 60


def _one():
    return QSeries.constant(1)


def phi_at(m, order) -> QSeries:
    """``phi(q**m)`` exact below ``order``."""
    m = frac(m)
    return qs_scale_q(phi_series(frac(order) / m), m)


def chi_at(m, order) -> QSeries:
    """``chi(q**m)`` exact below ``order``."""
    m = frac(m)
    return qs_scale_q(chi_series(frac(order) / m), m)


def u_term(n: int, k: int, order) -> QSeries:
    """``2 q^(k^2/n) f(q^(n+2k), q^(n-2k)) / phi(q^n)``."""
    order = frac(order)
    shift = Fraction(k * k, n)
    theta = theta_f(n + 2 * k, n - 2 * k, order - shift)
    return qs_mul(qs_mul(QSeries.monomial(2, shift), theta), qs_inv(phi_at(n, order)))


@dataclass(frozen=True)
class NonicContext:
    order: Fraction
    u1: QSeries
    u2: QSeries
    u3: QSeries
    u4: QSeries
    p: QSeries
    phi1: QSeries
    phi3: QSeries
    phi9: QSeries
    phi_1_3: QSeries
    phi_1_9: QSeries
    chi1: QSeries
    chi3: QSeries
    chi9: QSeries

    @property
    def alpha(self) -> QSeries:
        return self.u2 * self.u4 * self.u4

    @property
    def beta(self) -> QSeries:
        return self.u4 * self.u1 * self.u1

    @property
    def gamma(self) -> QSeries:
        return self.u1 * self.u2 * self.u2

    @property
    def phi_ratio(self) -> QSeries:
        """``phi(q) / phi(q^9)``."""
        return self.phi1 * qs_inv(self.phi9)

    @property
    def big_phi(self) -> QSeries:
        """``phi^2(q)/phi^2(q^9) + 3``, the recurring cubic coefficient factor."""
        r = self.phi_ratio
        return r * r + 3


def build_context(order=DEFAULT_ORDER) -> NonicContext:
    order = frac(order)
    if order < 3:
        raise ValueError("nonic context needs order >= 3")
    return _build_context(order)


@lru_cache(maxsize=8)
def _build_context(order: Fraction) -> NonicContext:
    u1, u2, u3, u4 = (u_term(9, k, order) for k in range(1, 5))
    return NonicContext(
        order=order,
        u1=u1,
        u2=u2,
        u3=u3,
        u4=u4,
        p=u1 * u2 * u4,
        phi1=phi_at(1, order),
        phi3=phi_at(3, order),
        phi9=phi_at(9, order),
        phi_1_3=phi_at(Fraction(1, 3), order),
        phi_1_9=phi_at(Fraction(1, 9), order),
        chi1=chi_at(1, order),
        chi3=chi_at(3, order),
        chi9=chi_at(9, order),
    )


def _ctx(order, ctx):
    return ctx if ctx is not None else build_context(order)


def _u3_at_cube_root(order) -> QSeries:
    """``u3(q^(1/3))`` exact below ``order``."""
    return qs_scale_q(u_term(9, 3, 3 * frac(order)), Fraction(1, 3))


# -------------------------------------------------------------- checks


def verify_phi_decomposition(n: int, order=DEFAULT_ORDER, check_id: str | None = None) -> CheckReport:
    """``phi(q^(1/n))/phi(q^n) = 1 + sum_k 2 q^(k^2/n) f(q^(n+2k), q^(n-2k))/phi(q^n)``."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be a positive odd integer")
    order = frac(order)
    lhs = phi_at(Fraction(1, n), order) * qs_inv(phi_at(n, order))
    rhs = _one()
    for k in range(1, (n - 1) // 2 + 1):
        rhs = rhs + u_term(n, k, order)
    return formal_report(
        check_id or f"phi-decomp-{n}",
        [("ratio", qs_compare(lhs, rhs))],
        form=f"phi(q^(1/{n}))/phi(q^{n}) = 1 + sum_(k=1)^{(n - 1) // 2} 2q^(k^2/{n}) f(q^({n}+2k), q^({n}-2k))/phi(q^{n})",
    )


def check_nonic_ii(order=DEFAULT_ORDER, ctx=None, check_id="nonic-ii") -> CheckReport:
    c = _ctx(order, ctx)
    rhs = QSeries.monomial(8, Fraction(7, 3)) * c.chi1 * qs_inv(c.chi9**6 * c.chi3)
    return formal_report(
        check_id,
        [("p", qs_compare(c.p, rhs))],
        form="u1 u2 u4 = 8 q^(7/3) chi(q) / (chi^6(q^9) chi(q^3))",
    )


def check_u3_i(order=DEFAULT_ORDER, ctx=None, check_id="lemma-u3-i") -> CheckReport:
    c = _ctx(order, ctx)
    return formal_report(
        check_id,
        [("u3", qs_compare(c.u3, c.phi_ratio - 1))],
        form="u3 = phi(q)/phi(q^9) - 1",
    )


def verify_u3_forms(order=DEFAULT_ORDER, ctx=None) -> list[CheckReport]:
    c = _ctx(order, ctx)
    u3 = c.u3
    inv_phi9 = qs_inv(c.phi9)
    r3 = c.phi3 * inv_phi9
    ii = formal_report(
        "lemma-u3-ii",
        [("u3^3", qs_compare(u3**3, r3**4 - 1))],
        form="u3^3 = phi^4(q^3)/phi^4(q^9) - 1  (cubed)",
    )
    iii = formal_report(
        "lemma-u3-iii",
        [("u3", qs_compare(u3, QSeries.monomial(2, 1) * c.chi3 * qs_inv(c.chi9**3)))],
        form="u3 = 2q chi(q^3)/chi^3(q^9)",
    )
    w = _u3_at_cube_root(c.order)
    u3c = u3**3 + 1
    iv = formal_report(
        "lemma-u3-iv",
        [("cleared", qs_compare(w**3 * u3c, (u3 + 1) ** 4 - u3c))],
        form="u3(q^(1/3))^3 (u3^3 + 1) = (u3 + 1)^4 - (u3^3 + 1)",
    )
    return [check_u3_i(ctx=c), ii, iii, iv]


def verify_p_forms(order=DEFAULT_ORDER, ctx=None) -> list[CheckReport]:
    c = _ctx(order, ctx)
    p, u3 = c.p, c.u3
    prod = formal_report(
        "lemma-p-prod",
        [("u1u2u3u4", qs_compare(p * u3, QSeries.monomial(16, Fraction(10, 3)) * c.chi1 * qs_inv(c.chi9**9)))],
        form="u1 u2 u3 u4 = 16 q^(10/3) chi(q)/chi^9(q^9)",
    )
    ii = formal_report(
        "lemma-p-ii",
        [("p", qs_compare(p, u3 * u3 * _u3_at_cube_root(c.order)))],
        form="p = u3(q)^2 u3(q^(1/3))",
    )
    r91 = c.phi_ratio
    r31 = c.phi1 * qs_inv(c.phi3)
    iii = formal_report(
        "lemma-p-iii",
        [("p^3", qs_compare(p**3, (r91 - 1) ** 6 * (r31**4 - 1)))],
        form="p^3 = (phi(q)/phi(q^9) - 1)^6 (phi^4(q)/phi^4(q^3) - 1)  (cubed)",
    )
    iv = formal_report(
        "lemma-p-iv",
        [("cleared", qs_compare(p**3 * (u3 * u3 - u3 + 1), u3**7 * (u3 * u3 + 2 * u3 + 4)))],
        form="p^3 (u3^2 - u3 + 1) = u3^7 (u3^2 + 2u3 + 4)",
    )
    return [check_nonic_ii(ctx=c, check_id="lemma-p-i"), ii, iii, iv, prod]


def verify_sum_u124(order=DEFAULT_ORDER, ctx=None) -> list[CheckReport]:
    c = _ctx(order, ctx)
    p, u3 = c.p, c.u3
    s3 = (c.u1 + c.u2 + c.u4) ** 3
    r91 = c.phi_ratio
    rhs_i = r91**3 * ((c.phi_1_3 * qs_inv(c.phi1)) ** 4 - 1)
    i = formal_report(
        "lemma-sum124-i",
        [("cubed", qs_compare(s3, rhs_i))],
        form="(u1+u2+u4)^3 = phi^3(q)/phi^3(q^9) (phi^4(q^(1/3))/phi^4(q) - 1)",
    )
    u3sq = u3 * u3
    clear = u3sq * (p**3 + u3sq**3)
    rhs_ii = (u3 + 1) ** 3 * ((p + u3sq) ** 4 - clear)
    ii = formal_report(
        "lemma-sum124-ii",
        [("cleared", qs_compare(s3 * clear, rhs_ii)), ("rhs(i)=rhs(ii)", qs_compare(rhs_i * clear, rhs_ii))],
        form="(u1+u2+u4)^3 u3^2 (p^3 + u3^6) = (u3+1)^3 ((p + u3^2)^4 - u3^2 (p^3 + u3^6))",
    )
    return [i, ii]


def verify_u3_p_bridge(order=DEFAULT_ORDER, ctx=None) -> CheckReport:
    """The p/u3 rational identity multiplied through by ``p u3^2 (p^2 - p u3^2 + u3^4)``."""
    c = _ctx(order, ctx)
    p, u3 = c.p, c.u3
    u3sq = u3 * u3
    k = u3sq + 2 * u3 + 4
    d = p * p - p * u3sq + u3sq * u3sq
    lhs = (p * p * (u3**3 + 4) + 6 * p * p * u3sq + 3 * u3**3 * k * (2 * u3sq + p)) * d
    rhs = (u3 + 1) ** 3 * (p * (p + u3sq) ** 3 - p * u3sq * d)
    return formal_report(
        "lemma-bridge",
        [("cleared", qs_compare(lhs, rhs))],
        form=(
            "[p^2(u3^3+4) + 6p^2 u3^2 + 3u3^3 (u3^2+2u3+4)(2u3^2+p)] (p^2 - p u3^2 + u3^4)"
            " = (u3+1)^3 [p (p+u3^2)^3 - p u3^2 (p^2 - p u3^2 + u3^4)]"
        ),
    )


def verify_power_splits(order=DEFAULT_ORDER, ctx=None) -> list[CheckReport]:
    c = _ctx(order, ctx)
    u1, u2, u4, u3, p = c.u1, c.u2, c.u4, c.u3, c.p
    bphi = c.big_phi
    s1 = u1 * u2 * u2 + u2 * u4 * u4 + u4 * u1 * u1
    s2 = u1 * u1 * u2 + u2 * u2 * u4 + u4 * u4 * u1
    cubes = u1**3 + u2**3 + u4**3
    u3sq = u3 * u3
    i = formal_report("lemma-splits-i", [("sum", qs_compare(s1, u3 * bphi))],
                      form="u1 u2^2 + u2 u4^2 + u4 u1^2 = u3 (phi^2(q)/phi^2(q^9) + 3)")
    ii = formal_report("lemma-splits-ii", [("sum", qs_compare(p * s2, 2 * u3**3 * bphi))],
                       form="p (u1^2 u2 + u2^2 u4 + u4^2 u1) = 2 u3^3 (phi^2(q)/phi^2(q^9) + 3)")
    iii = formal_report("lemma-splits-iii", [("cleared", qs_compare(u3sq * cubes, p * (u3**3 + 4)))],
                        form="u3^2 (u1^3 + u2^3 + u4^3) = p (u3^3 + 4)")
    # master identity before splitting; M_alpha of each side must give the parts
    inv_p = qs_inv(p)
    inv_u3sq = qs_inv(u3sq)
    lhs = p * inv_u3sq * (u3**3 + 4) + 3 * u3 * bphi * (2 * u3sq * inv_p + 1)
    rhs = cubes + 3 * (s1 + s2)
    comparisons = [("master", qs_compare(lhs, rhs))]
    for alpha, left, right, tag in (
        (Fraction(0), 3 * u3 * bphi, 3 * s1, "M_0"),
        (Fraction(2, 3), 6 * u3**3 * bphi * inv_p, 3 * s2, "M_2/3"),
        (Fraction(1, 3), p * inv_u3sq * (u3**3 + 4), cubes, "M_1/3"),
    ):
        comparisons.append((f"{tag}(lhs)", qs_compare(frac_filter(lhs, alpha), left)))
        comparisons.append((f"{tag}(rhs)", qs_compare(frac_filter(rhs, alpha), right)))
        comparisons.append((f"{tag}(lhs-rhs)", qs_compare(frac_filter(lhs - rhs, alpha), QSeries.zero())))
    split = formal_report(
        "lemma-splits-filter",
        comparisons,
        form=(
            "(p/u3^2)(u3^3+4) + 3u3 Phi (2u3^2/p + 1) = u1^3+u2^3+u4^3 + 3(sum u1u2^2 + sum u1^2u2), "
            "split by M_0, M_2/3, M_1/3"
        ),
    )
    return [i, ii, iii, split]


def verify_reciprocal_sum(order=DEFAULT_ORDER, ctx=None) -> CheckReport:
    c = _ctx(order, ctx)
    u1c, u2c, u4c = c.u1**3, c.u2**3, c.u4**3
    u3, p = c.u3, c.p
    pairs = u2c * u4c + u1c * u4c + u1c * u2c
    poly = u3**4 - u3**3 + 6 * u3 * u3 - 8 * u3 + 8
    via_inverse = p**3 * (qs_inv(u1c) + qs_inv(u2c) + qs_inv(u4c))
    return formal_report(
        "cor-reciprocal",
        [("cleared", qs_compare(u3**3 * pairs, p * p * poly)), ("p^3 sum 1/u^3", qs_compare(via_inverse, pairs))],
        form="u3^3 (u2^3 u4^3 + u1^3 u4^3 + u1^3 u2^3) = p^2 (u3^4 - u3^3 + 6u3^2 - 8u3 + 8)",
    )


def verify_root_construction(order=DEFAULT_ORDER, ctx=None) -> CheckReport:
    c = _ctx(order, ctx)
    u1, u2, u4, u3, p = c.u1, c.u2, c.u4, c.u3, c.p
    bphi = c.big_phi
    k = u3 * u3 + 2 * u3 + 4
    p3 = p**3
    a, b, g = c.alpha, c.beta, c.gamma
    zero = QSeries.zero()
    comparisons = []
    for name, xi in (("alpha", a), ("beta", b), ("gamma", g)):
        xi2 = xi * xi
        r = xi2 * xi - u3 * bphi * (xi2 - 2 * u3 * u3 * xi) - p3
        r_alt = xi2 * xi - u3 * k * xi2 + 2 * u3**3 * k * xi - p3
        comparisons.append((f"r({name})", qs_compare(r, zero)))
        comparisons.append((f"r_alt({name})", qs_compare(r_alt, zero)))
    comparisons.append(("e1", qs_compare(a + b + g, u3 * bphi)))
    comparisons.append(("e2", qs_compare(a * b + b * g + g * a, 2 * u3**3 * bphi)))
    comparisons.append(("e3", qs_compare(a * b * g, p3)))
    comparisons.append(("u1^3 alpha = beta p", qs_compare(b * p, a * u1**3)))
    comparisons.append(("u2^3 beta = gamma p", qs_compare(g * p, b * u2**3)))
    comparisons.append(("u4^3 gamma = alpha p", qs_compare(a * p, g * u4**3)))
    return formal_report(
        "nonic-iv-v",
        comparisons,
        form=(
            "alpha=u2u4^2, beta=u4u1^2, gamma=u1u2^2: r(xi) = xi^3 - u3 Phi (xi^2 - 2u3^2 xi) - p^3 = 0, "
            "alt r with Phi=u3^2+2u3+4, u1^3 = beta p/alpha (cubed)"
        ),
    )


# --------------------------------------------------------------- septic


@dataclass(frozen=True)
class SepticContext:
    order: Fraction
    u: QSeries
    v: QSeries
    w: QSeries

    @property
    def p(self) -> QSeries:
        return self.u * self.v * self.w


@lru_cache(maxsize=4)
def build_septic(order=DEFAULT_ORDER) -> SepticContext:
    order = frac(order)
    u, v, w = (u_term(7, k, order) for k in (1, 2, 3))
    return SepticContext(order, u, v, w)


def verify_septic_formal(order=DEFAULT_ORDER, ctx: SepticContext | None = None) -> list[CheckReport]:
    c = ctx if ctx is not None else build_septic(frac(order))
    order = c.order
    p = c.p
    chi1 = chi_at(1, order)
    chi7 = chi_at(7, order)
    ii = formal_report(
        "septic-ii",
        [("p", qs_compare(p, QSeries.monomial(8, 2) * chi1 * qs_inv(chi7**7)))],
        form="uvw = 8 q^2 (-q;q^2)_inf / (-q^7;q^14)_inf^7",
    )
    r4 = (phi_at(1, order) * qs_inv(phi_at(7, order))) ** 4
    one_minus_p = 1 - p
    iii = formal_report(
        "septic-iii",
        [("sum", qs_compare(r4 * r4 - (2 + 5 * p) * r4 + one_minus_p**3, QSeries.zero()))],
        form="phi^8(q)/phi^8(q^7) - (2 + 5p) phi^4(q)/phi^4(q^7) + (1 - p)^3 = 0",
    )
    return [ii, iii]


# --------------------------------------------------------------- catalog


def formal_checks() -> dict:
    """Check id -> callable(order) returning a CheckReport."""

    def pick(fn, check_id):
        def run(order):
            for rep in fn(order):
                if rep.check_id == check_id:
                    return rep
            raise KeyError(check_id)

        return run

    checks = {
        "nonic-i": lambda order: verify_phi_decomposition(9, order, "nonic-i"),
        "nonic-ii": lambda order: check_nonic_ii(order),
        "nonic-iii": lambda order: check_u3_i(order, check_id="nonic-iii"),
        "nonic-iv-v": lambda order: verify_root_construction(order),
        "lemma-bridge": lambda order: verify_u3_p_bridge(order),
        "cor-reciprocal": lambda order: verify_reciprocal_sum(order),
        "septic-i": lambda order: verify_phi_decomposition(7, order, "septic-i"),
    }
    for fn, ids in (
        (verify_u3_forms, ["lemma-u3-i", "lemma-u3-ii", "lemma-u3-iii", "lemma-u3-iv"]),
        (verify_p_forms, ["lemma-p-i", "lemma-p-ii", "lemma-p-iii", "lemma-p-iv", "lemma-p-prod"]),
        (verify_sum_u124, ["lemma-sum124-i", "lemma-sum124-ii"]),
        (verify_power_splits, ["lemma-splits-i", "lemma-splits-ii", "lemma-splits-iii", "lemma-splits-filter"]),
        (verify_septic_formal, ["septic-ii", "septic-iii"]),
    ):
        for check_id in ids:
            checks[check_id] = pick(fn, check_id)
    return checks
