"""Rigorous evaluation of theta objects at real q in (0, 1).

All functions take a ``precision`` in decimal digits and work in
``context_for(precision)``, i.e. ``precision + GUARD_DIGITS`` digits.  Series
and products are truncated only once a proven tail bound drops below
``10**-(precision + GUARD_DIGITS)``; the tail is then folded into the ball.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .hpreal import GUARD_DIGITS, HighPrecisionReal, _up, context_for, hp, residual_bound
from .puiseux import frac

MAX_TERMS = 20000


class PrecisionUnreachable(ArithmeticError):
    """The series needs more terms than the configured cap."""


class UnsupportedInvariant(ValueError):
    """Class invariant outside the supported set."""


class ConsistencyError(ArithmeticError):
    """A closed form disagrees with its defining series."""


class RequestedPrecisionExceedsConstants(ValueError):
    """The embedded constants are not accurate enough for the request."""


# Gamma values, 121 significant digits, produced once by mpmath.gamma at 130
# digits (mpmath 1.3.0) and pasted here; they are closed-form targets only.
GAMMA_LITERALS = {
    Fraction(1, 4): "3.625609908221908311930685155867672002995167682880065467433377999569919243538729121618360136723384300361471751392420719966",
    Fraction(3, 4): "1.225416702465177645129098303362890526851239248108070611230118938289822888426798357237172376214915066582173380237588033163",
    Fraction(1, 3): "2.678938534707747633655692940974677644128689377957301100950428327590417610167743819540982889041188789419159049200072263336",
}
GAMMA_DIGITS = 120


def gamma_constant(x, ctx) -> HighPrecisionReal:
    """Embedded Gamma(x) for x in {1/4, 3/4, 1/3} as a ball."""
    x = frac(x)
    if x not in GAMMA_LITERALS:
        raise KeyError(f"no embedded gamma constant for {x}")
    if ctx.dps > GAMMA_DIGITS + GUARD_DIGITS:
        raise RequestedPrecisionExceedsConstants(f"gamma constants carry {GAMMA_DIGITS} digits")
    exact = Fraction(GAMMA_LITERALS[x])
    # truncation error of the literal plus rounding into ctx
    return hp(exact, ctx) + HighPrecisionReal(0, ctx.mpf(10) ** (-GAMMA_DIGITS), ctx)


# ---------------------------------------------------------------- helpers
def _as_ball(q0, precision: int) -> HighPrecisionReal:
    if isinstance(q0, HighPrecisionReal):
        return q0
    return hp(frac(q0), context_for(precision))


def _check_unit_interval(q: HighPrecisionReal):
    if not (q.lower > 0 and q.upper < 1):
        raise ValueError("q must lie strictly inside (0, 1)")


def _tolerance(ctx, precision: int):
    return ctx.mpf(10) ** (-(precision + GUARD_DIGITS))


def q_of(n, precision: int) -> HighPrecisionReal:
    """``exp(-pi*sqrt(n))`` for a positive rational ``n``."""
    ctx = context_for(precision)
    n = frac(n)
    if n <= 0:
        raise ValueError("n must be positive")
    return (-(HighPrecisionReal.pi(ctx) * hp(n, ctx).sqrt())).exp()


# ------------------------------------------------------------ theta sums
def eval_phi(q0, precision: int = 50, cap: int = MAX_TERMS) -> HighPrecisionReal:
    """phi(q0) = sum over all integers n of q0**(n*n)."""
    q = _as_ball(q0, precision)
    _check_unit_interval(q)
    ctx = q.ctx
    tol = _tolerance(ctx, precision)
    qhi = q.upper
    total = hp(1, ctx)
    term, ratio, q2 = q, q**3, q * q
    n = 1
    while True:
        total = total + 2 * term
        # sum_{m>n} q^{m^2} <= q^{(n+1)^2} / (1 - q^{2n+3})
        tail = _up(ctx, 2 * ctx.power(qhi, (n + 1) ** 2) / (1 - ctx.power(qhi, 2 * n + 3)))
        if tail < tol:
            break
        n += 1
        if n > cap:
            raise PrecisionUnreachable("q too close to 1; apply the transformation formula first")
        term, ratio = term * ratio, ratio * q2
    return total + HighPrecisionReal.from_interval(0, tail, ctx)


def eval_chi(q0, precision: int = 50, cap: int = MAX_TERMS) -> HighPrecisionReal:
    """chi(q0) = prod_{k>=1} (1 + q0**(2k-1))."""
    q = _as_ball(q0, precision)
    _check_unit_interval(q)
    ctx = q.ctx
    tol = _tolerance(ctx, precision)
    qhi = q.upper
    prod = hp(1, ctx)
    power, q2 = q, q * q
    k = 1
    while True:
        prod = prod * (1 + power)
        # log of the remaining factors <= q^{2k+1} / (1 - q^2)
        t = _up(ctx, ctx.power(qhi, 2 * k + 1) / (1 - qhi * qhi))
        slack = _up(ctx, prod.upper * ctx.expm1(t))
        if slack < tol:
            break
        k += 1
        if k > cap:
            raise PrecisionUnreachable("q too close to 1")
        power = power * q2
    return prod + HighPrecisionReal.from_interval(0, slack, ctx)


def _one_sided(logq: HighPrecisionReal, a: Fraction, b: Fraction, start: int, tol, ctx) -> HighPrecisionReal:
    """sum_{n>=start} q^{E(n)}, E(n) = a n(n+1)/2 + b n(n-1)/2, with a, b > 0."""
    def E(n):
        return a * n * (n + 1) / 2 + b * n * (n - 1) / 2

    lq_hi = logq.upper  # negative; the largest admissible log q
    total = hp(0, ctx)
    n = start

    def mp(r: Fraction):
        return ctx.mpf(r.numerator) / r.denominator

    while True:
        total = total + (logq * E(n)).exp()
        step = E(n + 2) - E(n + 1)
        tail = _up(ctx, ctx.exp(lq_hi * mp(E(n + 1))) / -ctx.expm1(lq_hi * mp(step)))
        if tail < tol:
            break
        n += 1
        if n - start > MAX_TERMS:
            raise PrecisionUnreachable("theta series did not converge")
    return total + HighPrecisionReal.from_interval(0, tail, ctx)


def eval_theta_f(x, y, q0, precision: int = 50) -> HighPrecisionReal:
    """Ramanujan's f(q0**x, q0**y) for positive rational exponents x, y."""
    x, y = frac(x), frac(y)
    if x <= 0 or y <= 0:
        raise ValueError("exponents must be positive")
    q = _as_ball(q0, precision)
    _check_unit_interval(q)
    ctx = q.ctx
    tol = _tolerance(ctx, precision) / 2
    L = q.log()
    return _one_sided(L, x, y, 0, tol, ctx) + _one_sided(L, y, x, 1, tol, ctx)


def eval_u(k: int, q0, precision: int = 50, modulus: int = 9) -> HighPrecisionReal:
    """u_k(q0) = 2 q^{k^2/m} f(q^{m+2k}, q^{m-2k}) / phi(q^m) with m = ``modulus`` (odd)."""
    m = modulus
    if not 1 <= k < m / 2:
        raise ValueError(f"k must satisfy 1 <= k < {m}/2")
    q = _as_ball(q0, precision)
    _check_unit_interval(q)
    shift = (q.log() * Fraction(k * k, m)).exp()
    return 2 * shift * eval_theta_f(m + 2 * k, m - 2 * k, q, precision) / eval_phi(q**m, precision)


def eval_p(q0, precision: int = 50) -> HighPrecisionReal:
    return eval_u(1, q0, precision) * eval_u(2, q0, precision) * eval_u(4, q0, precision)


def phi_exp(n, precision: int = 50, transform: bool = True) -> HighPrecisionReal:
    """phi(exp(-pi*sqrt(n))); for n < 1 the transformation formula moves q away from 1."""
    n = frac(n)
    if transform and n < 1:
        m = 1 / n
        ctx = context_for(precision)
        return hp(m, ctx) ** Fraction(1, 4) * eval_phi(q_of(m, precision), precision)
    return eval_phi(q_of(n, precision), precision)


# ------------------------------------------------------ class invariants
def _g_table(n: int, ctx) -> HighPrecisionReal:
    one = hp(1, ctx)
    two, three = hp(2, ctx), hp(3, ctx)
    r3 = three.sqrt()
    t = two.cbrt()
    if n == 1:
        return one
    if n == 3:
        return two ** Fraction(1, 12)
    if n == 9:
        return (2 + r3) ** Fraction(1, 6)
    if n == 27:
        return two ** Fraction(1, 12) / (t - 1).cbrt()
    if n == 81:
        return (((2 * (r3 + 1)).cbrt() + 1) / ((2 * (r3 - 1)).cbrt() - 1)).cbrt()
    if n == 243:
        return two ** Fraction(1, 12) * (t + t * t + three.cbrt()) / (9 - 2 * three ** Fraction(4, 3)).cbrt()
    raise UnsupportedInvariant(f"G_{n} is not in the supported table")


SUPPORTED_INVARIANTS = (1, 3, 9, 27, 81, 243)


@dataclass(frozen=True)
class ClassInvariant:
    n: Fraction
    value: HighPrecisionReal
    source: str  # table | reflection | formula


def _canonical(n) -> tuple[int, bool]:
    n = frac(n)
    if n <= 0:
        raise UnsupportedInvariant("n must be positive")
    reflected = n < 1
    m = 1 / n if reflected else n
    if m.denominator != 1 or int(m) not in SUPPORTED_INVARIANTS:
        raise UnsupportedInvariant(f"G_{n} is outside the supported set")
    return int(m), reflected


def invariant_from_definition(n, precision: int = 50) -> HighPrecisionReal:
    """2^{-1/4} q^{-1/24} chi(q) at q = exp(-pi*sqrt(n))."""
    ctx = context_for(precision)
    n = frac(n)
    pi = HighPrecisionReal.pi(ctx)
    q = q_of(n, precision)
    q_pow = (pi * hp(n, ctx).sqrt() / 24).exp()  # q^{-1/24}
    return hp(2, ctx) ** Fraction(-1, 4) * q_pow * eval_chi(q, precision)


def g81n_from_lemma(m, precision: int = 50) -> HighPrecisionReal:
    """G_{81m} from G_m and G_{9m} via the cubic product relation."""
    gm = class_invariant(m, precision, check=False).value
    g9m = class_invariant(9 * frac(m), precision, check=False).value
    s2 = hp(2, gm.ctx).sqrt()
    cube = g9m * (s2 * g9m + gm**3) / (s2 * gm**3 - g9m)
    return cube.cbrt()


def class_invariant(n, precision: int = 50, source: str = "table", check: bool = True) -> ClassInvariant:
    """Closed-form G_n for n in {1, 3, 9, 27, 81, 243} and reciprocals.

    ``source="formula"`` rebuilds G_81 or G_243 from the two smaller seeds.
    With ``check`` the value is compared against the defining product.
    """
    m, reflected = _canonical(n)
    ctx = context_for(precision)
    if source == "formula":
        if m not in (81, 243):
            raise UnsupportedInvariant("formula route only covers G_81 and G_243")
        value = g81n_from_lemma(Fraction(m, 81), precision)
        tag = "formula"
    elif source == "table":
        value = _g_table(m, ctx)
        tag = "reflection" if reflected else "table"
    else:
        raise ValueError(f"unknown source {source!r}")
    if check:
        ref = invariant_from_definition(m, precision)
        if residual_bound(value, ref) >= Fraction(1, 10**precision):
            raise ConsistencyError(f"G_{m} closed form disagrees with its product definition")
    return ClassInvariant(frac(n), value, tag)


def p_u3_from_invariants(n, precision: int = 50, cross_check: bool = True):
    """(p, u3) at q = exp(-pi*sqrt(n)) from G_n, G_9n and G_81n."""
    n = frac(n)
    g1 = class_invariant(n, precision, check=False).value
    g9 = class_invariant(9 * n, precision, check=False).value
    g81 = class_invariant(81 * n, precision, check=False).value
    s2 = hp(2, g1.ctx).sqrt()
    p = 2 * s2 * g1 / (g9 * g81**6)
    u3 = s2 * g9 / g81**3
    if cross_check:
        p_ref, u3_ref = p_u3_from_chi(n, precision)
        tol = Fraction(1, 10**precision)
        if residual_bound(p, p_ref) >= tol or residual_bound(u3, u3_ref) >= tol:
            raise ConsistencyError(f"p/u3 invariants disagree with the chi products at n={n}")
    return p, u3


def p_u3_from_chi(n, precision: int = 50):
    """p = 8q^{7/3}chi(q)/(chi^6(q^9)chi(q^3)), u3 = 2q chi(q^3)/chi^3(q^9)."""
    q = q_of(n, precision)
    c1 = eval_chi(q, precision)
    c3 = eval_chi(q**3, precision)
    c9 = eval_chi(q**9, precision)
    p = 8 * q ** Fraction(7, 3) * c1 / (c9**6 * c3)
    u3 = 2 * q * c3 / c9**3
    return p, u3


def ratio_9n(n, precision: int = 50, cross_check: bool = True) -> HighPrecisionReal:
    """phi(e^{-9 pi sqrt n}) / phi(e^{-pi sqrt n}) = (1 + sqrt2 G_9n / G_n^3) / 3."""
    n = frac(n)
    gn = class_invariant(n, precision, check=False).value
    g9n = class_invariant(9 * n, precision, check=False).value
    value = (1 + hp(2, gn.ctx).sqrt() * g9n / gn**3) / 3
    if cross_check:
        ref = phi_exp(81 * n, precision) / phi_exp(n, precision)
        if residual_bound(value, ref) >= Fraction(1, 10**precision):
            raise ConsistencyError(f"9n-ratio closed form disagrees with the series at n={n}")
    return value


@lru_cache(maxsize=256)
def cached_phi_exp(n: Fraction, precision: int) -> HighPrecisionReal:
    return phi_exp(n, precision)
