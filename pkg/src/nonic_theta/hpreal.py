"""Real numbers carrying a rigorous absolute error bound.

A :class:`HighPrecisionReal` is a ball ``mid +- rad``.  Midpoints are mpmath
floats living in a private :class:`mpmath.MPContext`, so the working
precision travels with the value instead of being read from global state.

Bound policy: every rounded result is widened by ``2**(3 - prec)`` relative
(plus ``2**-prec`` absolute for sine and cosine), which covers round-to-nearest arithmetic and the
few-ulp accuracy of mpmath's elementary functions.  Radii are pushed upward by
a tiny relative factor after each update so that rounding inside the bound
computation never shrinks them.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

from mpmath import MPContext

GUARD_DIGITS = 15


class PrecisionError(ArithmeticError):
    """A bound could not be established at the working precision."""


@lru_cache(maxsize=None)
def working_context(digits: int) -> MPContext:
    """Private mpmath context with ``digits`` decimal digits (never mutated)."""
    ctx = MPContext()
    ctx.dps = int(digits)
    return ctx


def context_for(digits: int) -> MPContext:
    """Context for a check asking for ``digits``: adds the guard digits."""
    return working_context(int(digits) + GUARD_DIGITS)


def _exact_fraction(x) -> Fraction:
    sign, man, exp, _ = x._mpf_
    if not man and exp:
        raise ValueError("not a finite number")
    man = -int(man) if sign else int(man)
    return Fraction(man) * 2**exp if exp >= 0 else Fraction(man, 2 ** (-exp))


def decimal_upper(bound) -> str:
    """Short decimal string not smaller than ``bound``."""
    if isinstance(bound, Fraction):
        f = bound
    else:
        f = _exact_fraction(bound)
    if f == 0:
        return "0"
    e = math.floor(math.log10(f.numerator) - math.log10(f.denominator))
    mant = f / Fraction(10) ** e
    mant_up = math.ceil(mant * 100) / 100
    if mant_up >= 10:
        mant_up, e = mant_up / 10, e + 1
    return f"{mant_up:.2f}e{e:+d}"


Operand = Union["HighPrecisionReal", int, Fraction, str]


class HighPrecisionReal:
    """Ball ``mid +- rad`` with ``rad`` a guaranteed bound on the error."""

    __slots__ = ("mid", "rad", "ctx")

    def __init__(self, mid, rad, ctx: MPContext):
        self.ctx = ctx
        self.mid = ctx.mpf(mid)
        self.rad = ctx.mpf(rad)
        if self.rad < 0:
            raise ValueError("radius must be nonnegative")

    # ----------------------------------------------------- construction
    @classmethod
    def exact(cls, value, ctx: MPContext) -> "HighPrecisionReal":
        """Ball around an exact rational (int, Fraction or ``"num/den"``)."""
        if isinstance(value, HighPrecisionReal):
            return value._in(ctx)
        if hasattr(value, "man_exp"):
            f = _exact_fraction(value)
        else:
            f = Fraction(value) if not isinstance(value, Fraction) else value
        if f.denominator == 1:
            mid = ctx.mpf(f.numerator)
        else:
            mid = ctx.mpf(f.numerator) / f.denominator
        err = abs(_exact_fraction(mid) - f)
        rad = ctx.mpf(0) if err == 0 else _ulp(ctx, mid)
        return cls(mid, rad, ctx)

    @classmethod
    def pi(cls, ctx: MPContext) -> "HighPrecisionReal":
        return cls(+ctx.pi, _ulp(ctx, ctx.pi), ctx)

    @classmethod
    def from_interval(cls, lo, hi, ctx: MPContext) -> "HighPrecisionReal":
        lo, hi = ctx.mpf(lo), ctx.mpf(hi)
        if lo > hi:
            lo, hi = hi, lo
        mid = (lo + hi) / 2
        rad = max(hi - mid, mid - lo)
        return cls(mid, _up(ctx, rad + _ulp(ctx, mid)), ctx)

    def _in(self, ctx: MPContext) -> "HighPrecisionReal":
        if ctx is self.ctx:
            return self
        mid = ctx.mpf(self.mid)
        return HighPrecisionReal(mid, _up(ctx, ctx.mpf(self.rad) + _ulp(ctx, mid)), ctx)

    def _coerce(self, other: Operand) -> "HighPrecisionReal":
        if isinstance(other, HighPrecisionReal):
            return other._in(self.ctx)
        return HighPrecisionReal.exact(other, self.ctx)

    # ------------------------------------------------------ inspection
    @property
    def value(self):
        return self.mid

    @property
    def abs_error(self):
        return self.rad

    @property
    def lower(self):
        return self.mid - self.rad - _ulp(self.ctx, self.mid)

    @property
    def upper(self):
        return self.mid + self.rad + _ulp(self.ctx, self.mid)

    def magnitude_upper(self):
        """Upper bound on ``|x|``."""
        return _up(self.ctx, abs(self.mid) + self.rad + _ulp(self.ctx, self.mid))

    def sign(self) -> int:
        """+1 or -1 when certain, 0 when the ball touches zero."""
        if self.lower > 0:
            return 1
        if self.upper < 0:
            return -1
        return 0

    def is_positive(self) -> bool:
        return self.sign() == 1

    def contains(self, value) -> bool:
        v = Fraction(value) if not isinstance(value, HighPrecisionReal) else None
        if v is None:
            return self.overlaps(value)
        return _exact_fraction(self.lower) <= v <= _exact_fraction(self.upper)

    def overlaps(self, other: "HighPrecisionReal") -> bool:
        other = self._coerce(other)
        return not (self.upper < other.lower or other.upper < self.lower)

    def digits_of_accuracy(self) -> float:
        if self.rad == 0:
            return float("inf")
        return float(-self.ctx.log10(self.rad))

    def __float__(self):
        return float(self.mid)

    def __repr__(self):
        return f"HighPrecisionReal({self.ctx.nstr(self.mid, 20)} +- {self.ctx.nstr(self.rad, 3)})"

    def to_str(self, digits: int) -> str:
        return self.ctx.nstr(self.mid, digits, strip_zeros=False)

    # ------------------------------------------------------ arithmetic
    def __add__(self, other: Operand):
        o = self._coerce(other)
        ctx = self.ctx
        mid = self.mid + o.mid
        rnd = _round_err(ctx, mid, self, o, lambda: ctx.fadd(self.mid, o.mid, exact=True))
        return HighPrecisionReal(mid, _up(ctx, self.rad + o.rad + rnd), ctx)

    __radd__ = __add__

    def __neg__(self):
        return HighPrecisionReal(-self.mid, self.rad, self.ctx)

    def __sub__(self, other: Operand):
        return self + (-self._coerce(other))

    def __rsub__(self, other: Operand):
        return self._coerce(other) - self

    def __mul__(self, other: Operand):
        o = self._coerce(other)
        ctx = self.ctx
        mid = self.mid * o.mid
        rnd = _round_err(ctx, mid, self, o, lambda: ctx.fmul(self.mid, o.mid, exact=True))
        rad = abs(self.mid) * o.rad + abs(o.mid) * self.rad + self.rad * o.rad + rnd
        return HighPrecisionReal(mid, _up(ctx, rad), ctx)

    __rmul__ = __mul__

    def __truediv__(self, other: Operand):
        o = self._coerce(other)
        ctx = self.ctx
        gap = (abs(o.mid) - o.rad) * (1 - ctx.ldexp(1, 12 - ctx.prec))
        if gap <= 0:
            raise ZeroDivisionError("divisor ball contains zero")
        mid = self.mid / o.mid
        rad = (self.rad + _up(ctx, abs(mid)) * o.rad) / gap
        exact_quotient = self.rad == 0 and o.rad == 0 and ctx.fmul(mid, o.mid, exact=True) == self.mid
        rnd = 0 if exact_quotient else _ulp(ctx, mid)
        return HighPrecisionReal(mid, _up(ctx, rad + rnd), ctx)

    def __rtruediv__(self, other: Operand):
        return self._coerce(other) / self

    def __pow__(self, exponent):
        """Integer or rational power; rational powers use the real branch."""
        if isinstance(exponent, int):
            return self._ipow(exponent)
        e = Fraction(exponent)
        if e.denominator == 1:
            return self._ipow(e.numerator)
        return self.root(e.denominator)._ipow(e.numerator)

    def _ipow(self, n: int):
        if n < 0:
            return 1 / self._ipow(-n)
        result = HighPrecisionReal.exact(1, self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __abs__(self):
        s = self.sign()
        if s == 1:
            return self
        if s == -1:
            return -self
        top = max(abs(self.mid - self.rad), abs(self.mid + self.rad))
        return HighPrecisionReal.from_interval(0, top, self.ctx)

    # --------------------------------------------- elementary functions
    def _monotone(self, f):
        """Image of the ball under an increasing function, evaluated at both ends."""
        ctx = self.ctx
        flo, fhi = f(self.mid - self.rad), f(self.mid + self.rad)
        flo = flo - _rel_ulp(ctx, flo)
        fhi = fhi + _rel_ulp(ctx, fhi)
        return HighPrecisionReal.from_interval(flo, fhi, ctx)

    def sqrt(self):
        ctx = self.ctx
        lo = self.mid - self.rad
        if self.mid + self.rad < 0:
            raise ValueError("square root of a negative ball")
        if lo <= 0:
            return HighPrecisionReal.from_interval(0, ctx.sqrt(self.mid + self.rad) + _fun_ulp(ctx, 1), ctx)
        return self._monotone(ctx.sqrt)

    def root(self, k: int):
        """Real ``k``-th root; odd ``k`` accepts negative arguments."""
        ctx = self.ctx
        if k == 1:
            return self
        if k % 2 == 0:
            if k == 2:
                return self.sqrt()
            return self.sqrt().root(k // 2)

        def real_root(x):
            if x == 0:
                return ctx.mpf(0)
            r = ctx.root(abs(x), k)
            return r if x > 0 else -r

        return self._monotone(real_root)

    def cbrt(self):
        return self.root(3)

    def exp(self):
        return self._monotone(self.ctx.exp)

    def log(self):
        if self.mid - self.rad <= 0:
            raise ValueError("logarithm of a ball that is not positive")
        return self._monotone(self.ctx.log)

    def cos(self):
        ctx = self.ctx
        mid = ctx.cos(self.mid)
        return HighPrecisionReal(mid, _up(ctx, self.rad + _fun_ulp(ctx, mid)), ctx)

    def sin(self):
        ctx = self.ctx
        mid = ctx.sin(self.mid)
        return HighPrecisionReal(mid, _up(ctx, self.rad + _fun_ulp(ctx, mid)), ctx)


def cos_pi(r, ctx: MPContext) -> HighPrecisionReal:
    """``cos(r*pi)`` for an exact rational ``r``."""
    return (HighPrecisionReal.pi(ctx) * Fraction(r)).cos()


def sin_pi(r, ctx: MPContext) -> HighPrecisionReal:
    """``sin(r*pi)`` for an exact rational ``r``."""
    return (HighPrecisionReal.pi(ctx) * Fraction(r)).sin()


def hp(value, ctx: MPContext) -> HighPrecisionReal:
    return HighPrecisionReal.exact(value, ctx)


def residual_bound(lhs: HighPrecisionReal, rhs: HighPrecisionReal) -> Fraction:
    """Exact rational upper bound on ``|lhs - rhs|`` over both balls."""
    return _exact_fraction((lhs - rhs).magnitude_upper())


def _round_err(ctx: MPContext, mid, a, b, exact):
    """Rounding error of ``mid``: zero when both operands are exact and so is the result."""
    if a.rad == 0 and b.rad == 0 and exact() == mid:
        return ctx.zero
    return _ulp(ctx, mid)


def _ulp(ctx: MPContext, x):
    return abs(ctx.mpf(x)) * ctx.ldexp(1, 1 - ctx.prec)


def _rel_ulp(ctx: MPContext, x):
    return abs(ctx.mpf(x)) * ctx.ldexp(1, 3 - ctx.prec)


def _fun_ulp(ctx: MPContext, x):
    return abs(ctx.mpf(x)) * ctx.ldexp(1, 3 - ctx.prec) + ctx.ldexp(1, -ctx.prec)


def _up(ctx: MPContext, x):
    return x * (1 + ctx.ldexp(1, 12 - ctx.prec))
