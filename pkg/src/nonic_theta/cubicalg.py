"""Real cubics over balls: rigorous roots, root ordering, and the page-356 identity."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .hpreal import HighPrecisionReal, context_for, hp, residual_bound


class NonRealRoots(ArithmeticError):
    """The cubic has a complex-conjugate pair of roots."""


class IllConditioned(ArithmeticError):
    """Root enclosures could not be made tight enough."""


class NoValidOrder(ValueError):
    """No arrangement of the roots satisfies the ordering conditions."""


class AmbiguousOrder(ValueError):
    """An ordering inequality is within its error bound of zero."""


class ComplexQuadraticRoots(ArithmeticError):
    """The y-quadratic has negative discriminant."""


def _ball(x, ctx) -> HighPrecisionReal:
    return x._in(ctx) if isinstance(x, HighPrecisionReal) else hp(x, ctx)


@dataclass(frozen=True)
class Cubic:
    """Monic cubic x^3 + c2 x^2 + c1 x + c0 with ball coefficients."""

    c2: HighPrecisionReal
    c1: HighPrecisionReal
    c0: HighPrecisionReal

    @classmethod
    def monic(cls, c2, c1, c0, precision: int = 50) -> "Cubic":
        ctx = next((c.ctx for c in (c2, c1, c0) if isinstance(c, HighPrecisionReal)), context_for(precision))
        return cls(_ball(c2, ctx), _ball(c1, ctx), _ball(c0, ctx))

    @classmethod
    def from_roots(cls, roots, precision: int = 50) -> "Cubic":
        r1, r2, r3 = roots
        ctx = next((r.ctx for r in roots if isinstance(r, HighPrecisionReal)), context_for(precision))
        r1, r2, r3 = (_ball(r, ctx) for r in roots)
        return cls(-(r1 + r2 + r3), r1 * r2 + r2 * r3 + r3 * r1, -(r1 * r2 * r3))

    @property
    def ctx(self):
        return self.c2.ctx

    def __call__(self, x) -> HighPrecisionReal:
        x = _ball(x, self.ctx)
        return ((x + self.c2) * x + self.c1) * x + self.c0

    def discriminant(self) -> HighPrecisionReal:
        b, c, d = self.c2, self.c1, self.c0
        return 18 * b * c * d - 4 * b**3 * d + b * b * c * c - 4 * c**3 - 27 * d * d

    def depressed(self):
        """(P, Q) with x = y - c2/3 turning the cubic into y^3 + P y + Q."""
        b, c, d = self.c2, self.c1, self.c0
        P = c - b * b / 3
        Q = 2 * b**3 / 27 - b * c / 3 + d
        return P, Q


def solve_cubic_real(c: Cubic, precision: int = 50):
    """All three real roots in ascending order, each as a certified enclosure.

    Midpoints come from the trigonometric solution; every root is then boxed
    by a rigorous sign change of the cubic, which holds for every cubic whose
    coefficients lie in the coefficient balls.
    """
    ctx = c.ctx
    disc = c.discriminant()
    shift = c.c2 / 3
    P, Q = c.depressed()
    if disc.sign() == -1:
        raise NonRealRoots("discriminant is negative")
    if disc.sign() == 0:
        if P.sign() == 0 and Q.sign() == 0:
            # triple root; |y| <= 2 max(|P|^(1/2), |Q/2|^(1/3)) encloses every root
            spread = 2 * max(ctx.sqrt(P.magnitude_upper()), ctx.cbrt(Q.magnitude_upper() / 2))
            root = -shift + HighPrecisionReal(0, spread, ctx)
            if root.rad > ctx.mpf(10) ** (-precision):
                raise IllConditioned("triple root enclosure too wide")
            return (root, root, root)
        raise IllConditioned("repeated root within error bounds")

    p, q = P.mid, Q.mid
    m = 2 * ctx.sqrt(-p / 3)
    arg = (3 * q / (2 * p)) * ctx.sqrt(-3 / p)
    arg = max(min(arg, ctx.mpf(1)), ctx.mpf(-1))
    theta = ctx.acos(arg) / 3
    guesses = sorted(m * ctx.cos(theta - 2 * ctx.pi * k / 3) - shift.mid for k in range(3))

    target = ctx.mpf(10) ** (-precision)
    roots = []
    for g in guesses:
        roots.append(_certify(c, g, target, precision))
    for lo, hi in zip(roots, roots[1:]):
        if not lo.upper < hi.lower:
            raise IllConditioned("root enclosures overlap")
    return tuple(roots)


def _certify(c: Cubic, guess, target, precision: int) -> HighPrecisionReal:
    ctx = c.ctx
    delta = max(abs(guess), ctx.mpf(1)) * ctx.ldexp(1, 24 - ctx.prec)
    while delta < target:
        lo, hi = c(guess - delta), c(guess + delta)
        if lo.sign() * hi.sign() == -1:
            return HighPrecisionReal.from_interval(guess - delta, guess + delta, ctx)
        delta *= 16
    raise IllConditioned(f"cannot enclose a root near {ctx.nstr(guess, 10)} to {precision} digits")


# ------------------------------------------------------------- ordering
@dataclass(frozen=True)
class OrderedRootTriple:
    alpha: HighPrecisionReal
    beta: HighPrecisionReal
    gamma: HighPrecisionReal
    ordering_certificate: dict = field(default_factory=dict, compare=False)

    def as_tuple(self):
        return (self.alpha, self.beta, self.gamma)


def _conditions(a, b, g):
    return {
        "cyclic_product": (a - b) * (b - g) * (g - a),
        "ratio_gap_1": b / a - g / b,
        "ratio_gap_2": g / b - a / g,
    }


def order_roots(roots, p) -> OrderedRootTriple:
    """The unique arrangement with (a-b)(b-g)(g-a) > 0 and b/a > g/b > a/g."""
    roots = list(roots)
    if len(roots) != 3:
        raise ValueError("need exactly three roots")
    ctx = roots[0].ctx
    if not all(r.is_positive() for r in roots):
        raise ValueError("roots must be certainly positive")
    if not _ball(p, ctx).is_positive():
        raise ValueError("p must be positive")
    valid, unsure = [], []
    for perm in itertools.permutations(range(3)):
        a, b, g = (roots[i] for i in perm)
        conds = _conditions(a, b, g)
        signs = [v.sign() for v in conds.values()]
        if all(s == 1 for s in signs):
            valid.append((perm, conds))
        elif not any(s == -1 for s in signs):
            unsure.append(perm)
    if unsure:
        raise AmbiguousOrder("an ordering inequality is not resolved by the error bounds")
    if not valid:
        raise NoValidOrder("no arrangement satisfies both ordering conditions")
    # rotations are excluded by the ratio chain, so at most one survives
    if len(valid) > 1:
        raise AmbiguousOrder("several arrangements satisfy the conditions")
    perm, conds = valid[0]
    # canonical positions so the output does not depend on the input order
    a, b, g = (roots[i] for i in perm)
    cert = {name: val.to_str(12) for name, val in conds.items()}
    return OrderedRootTriple(a, b, g, cert)


def u124_from_roots(t: OrderedRootTriple, p):
    """Real cube roots of beta p/alpha, gamma p/beta, alpha p/gamma."""
    p = _ball(p, t.alpha.ctx)
    u1 = (t.beta * p / t.alpha).cbrt()
    u2 = (t.gamma * p / t.beta).cbrt()
    u4 = (t.alpha * p / t.gamma).cbrt()
    if not ((u1 - u2).is_positive() and (u2 - u4).is_positive() and u4.is_positive()):
        raise AmbiguousOrder("u1 > u2 > u4 > 0 is not certain")
    return u1, u2, u4


def nonic_cubic(u3, p) -> Cubic:
    """r(x) = x^3 - u3 Phi x^2 + 2 u3^3 Phi x - p^3 with Phi = u3^2 + 2u3 + 4."""
    ctx = u3.ctx
    p = _ball(p, ctx)
    big_phi = u3 * u3 + 2 * u3 + 4
    return Cubic(-(u3 * big_phi), 2 * u3**3 * big_phi, -(p**3))


# ---------------------------------------------------------- page 356
@dataclass(frozen=True)
class Entry356Result:
    a: HighPrecisionReal
    b: HighPrecisionReal
    roots: tuple
    mu: HighPrecisionReal
    nu: HighPrecisionReal
    t: HighPrecisionReal
    cube_root_sum: HighPrecisionReal
    residuals: dict  # name -> exact Fraction upper bound

    def worst(self) -> Fraction:
        return max(self.residuals.values())

    def passed(self, digits: int) -> bool:
        return self.worst() < Fraction(1, 10**digits)


def entry356_closed_form(a: HighPrecisionReal, b: HighPrecisionReal) -> HighPrecisionReal:
    """(a + 6 + 3(A+B)^(1/3) + 3(A-B)^(1/3))^(1/3)."""
    half = (a * b + 9) / 2
    A = half + 3 * (a + b)
    B = (half * half - a**3 - b**3 - 27).sqrt()
    return (a + 6 + 3 * (A + B).cbrt() + 3 * (A - B).cbrt()).cbrt()


def entry356_check(a, b, precision: int = 50) -> Entry356Result:
    """Evaluate every claim of the cubic entry for x^3 - a x^2 + b x - 1."""
    ctx = context_for(precision)
    a, b = _ball(a, ctx), _ball(b, ctx)
    cubic = Cubic(-a, b, hp(-1, ctx))
    # roots multiply to 1, so none is zero; negative ones take the real cube-root branch
    r1, r2, r3 = solve_cubic_real(cubic, precision)
    z1 = (r1 / r2).cbrt() + (r2 / r3).cbrt() + (r3 / r1).cbrt()
    z2 = (r2 / r1).cbrt() + (r3 / r2).cbrt() + (r1 / r3).cbrt()
    s = a + b + 3
    k = a * b + 6 * (a + b) + 9
    t = z1 + z2
    zero = hp(0, ctx)
    y1, y2 = z1**3, z2**3
    disc = k * k - 4 * s**3
    root = _nonneg_sqrt(disc)
    mu, nu = (k + root) / 2, (k - root) / 2
    # mu/nu labels: pair each cubed quantity with the nearer quadratic root
    if residual_bound(y1, mu) + residual_bound(y2, nu) > residual_bound(y1, nu) + residual_bound(y2, mu):
        mu, nu = nu, mu
    crs = r1.cbrt() + r2.cbrt() + r3.cbrt()
    closed = entry356_closed_form(a, b)
    residuals = {
        "z-product": residual_bound(z1 * z2, s),
        "t-cubic": residual_bound(t**3 - 3 * s * t - k, zero),
        "sextic-1": residual_bound(y1 * y1 - k * y1 + s**3, zero),
        "sextic-2": residual_bound(y2 * y2 - k * y2 + s**3, zero),
        "mu": residual_bound(y1, mu),
        "nu": residual_bound(y2, nu),
        "cube-root-sum": residual_bound(crs, closed),
    }
    return Entry356Result(a, b, (r1, r2, r3), mu, nu, t, crs, residuals)


def _nonneg_sqrt(x: HighPrecisionReal) -> HighPrecisionReal:
    if x.sign() == -1:
        raise ComplexQuadraticRoots("negative discriminant")
    return x.sqrt()


@dataclass(frozen=True)
class RestatedValue:
    """phi(q^(1/9))/phi(q^9) = 1 + u3 + (p y)^(1/3), with the root choice recorded."""

    value: HighPrecisionReal
    y: HighPrecisionReal
    discarded: HighPrecisionReal
    selector: str


def nonic_restated_eval(u3, p, precision: int = 50, reference_sum=None) -> RestatedValue:
    """Evaluate the restated nonic identity from u3 and p.

    The y-quadratic has two roots; the one kept is the nearer to
    (u1+u2+u4)^3 / p, where the sum is ``reference_sum`` if given (e.g. from
    series) and otherwise the closed form in u3 and p.
    """
    ctx = context_for(precision)
    u3, p = _ball(u3, ctx), _ball(p, ctx)
    big_phi = u3 * u3 + 2 * u3 + 4
    a = u3 / p * big_phi
    b = 2 * u3 * u3 * a / p
    k = a * b + 6 * (a + b) + 9
    s = a + b + 3
    root = _nonneg_sqrt(k * k - 4 * s**3)
    y_plus, y_minus = (k + root) / 2, (k - root) / 2
    if reference_sum is not None:
        target = _ball(reference_sum, ctx) ** 3 / p
        selector = "series"
    else:
        w = p / (u3 * u3)
        target = (u3 + 1) ** 3 * ((w + 1) ** 4 / (w**3 + 1) - 1) / p
        selector = "closed-form"
    if residual_bound(y_plus, target) <= residual_bound(y_minus, target):
        y, other = y_plus, y_minus
    else:
        y, other = y_minus, y_plus
    return RestatedValue(1 + u3 + (p * y).cbrt(), y, other, selector)
