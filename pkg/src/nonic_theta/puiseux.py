"""Truncated Puiseux series in ``q`` with exact rational coefficients.

A :class:`QSeries` is a finite set of terms ``c * q**e`` together with a
truncation ``order``: every coefficient below ``order`` is exact, nothing is
claimed at or above it.  Exponents are :class:`fractions.Fraction` values, so
grids such as ``1/9``, ``1/7`` or ``1/24`` mix freely.  Polynomials that are
exact to every order carry ``order = INF``.

All operations return new series; nothing is mutated after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Union

FracExponent = Fraction
Order = Union[Fraction, float]
Number = Union[int, Fraction]

INF = math.inf

__all__ = [
    "FracExponent",
    "INF",
    "QSeries",
    "SeriesDiff",
    "EmptySeries",
    "DivergentTheta",
    "frac",
    "qs_add",
    "qs_sub",
    "qs_neg",
    "qs_mul",
    "qs_pow",
    "qs_inv",
    "qs_div",
    "qs_scale_q",
    "qs_scale",
    "theta_f",
    "pochhammer_inf",
    "frac_filter",
    "qs_compare",
    "phi_series",
    "chi_series",
]


class EmptySeries(ZeroDivisionError):
    """Inversion of a series with no known terms."""


class DivergentTheta(ValueError):
    """``f(q**x, q**y)`` requested with ``x + y <= 0``."""


def frac(value) -> Fraction:
    """Parse an exponent or coefficient: int, Fraction, or ``"num/den"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _order(value) -> Order:
    if value is None or value == INF or value == "inf":
        return INF
    return frac(value)


def _fmt(x: Order) -> str:
    if x == INF:
        return "inf"
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _norm(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class QSeries:
    """Immutable truncated series ``sum c_e q**e + O(q**order)``."""

    __slots__ = ("_terms", "_order")

    def __init__(self, terms: Mapping | Iterable = (), order=INF):
        order = _order(order)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Fraction, Number] = {}
        for e, c in items:
            e = frac(e)
            if e >= order:
                continue
            c = frac(c) if not isinstance(c, int) else c
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: _norm(c) for e, c in sorted(acc.items()) if c != 0}
        self._order = order

    @classmethod
    def _raw(cls, terms: dict, order: Order) -> "QSeries":
        # terms already sorted, pruned and below order
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._order = order
        return obj

    @classmethod
    def constant(cls, c, order=INF) -> "QSeries":
        return cls({0: c}, order)

    @classmethod
    def monomial(cls, c, e, order=INF) -> "QSeries":
        return cls({frac(e): c}, order)

    @classmethod
    def zero(cls, order=INF) -> "QSeries":
        return cls({}, order)

    @property
    def terms(self) -> dict[Fraction, Number]:
        return dict(self._terms)

    @property
    def order(self) -> Order:
        return self._order

    def items(self):
        return self._terms.items()

    def coeff(self, e) -> Number:
        e = frac(e)
        if e >= self._order:
            raise ValueError(f"coefficient of q^{e} is beyond the truncation order {self._order}")
        return self._terms.get(e, 0)

    def valuation(self) -> Order:
        """Smallest exponent with a nonzero coefficient (``order`` if none)."""
        for e in self._terms:
            return e
        return self._order

    def leading(self) -> tuple[Fraction, Number]:
        for e, c in self._terms.items():
            return e, c
        raise EmptySeries("series has no terms below its order")

    def truncate(self, order) -> "QSeries":
        order = min(_order(order), self._order)
        return QSeries._raw({e: c for e, c in self._terms.items() if e < order}, order)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._order == other._order and self._terms == other._terms

    def __hash__(self):
        return hash((self._order, tuple(self._terms.items())))

    def __repr__(self):
        return f"QSeries({self.pretty()})"

    def pretty(self, max_terms: int = 12) -> str:
        parts = []
        for i, (e, c) in enumerate(self._terms.items()):
            if i == max_terms:
                parts.append("...")
                break
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "q"
            else:
                mono = f"q^({e})" if e.denominator != 1 or e < 0 else f"q^{e}"
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                cs = str(c) if isinstance(c, int) else f"({c})"
                s = cs + ("*" + mono if mono else "")
            parts.append(s)
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        if self._order != INF:
            body += f" + O(q^{self._order})"
        return body

    # arithmetic sugar; the named functions below are the real API
    def __add__(self, other):
        return qs_add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return qs_sub(self, _coerce(other))

    def __rsub__(self, other):
        return qs_sub(_coerce(other), self)

    def __neg__(self):
        return qs_neg(self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return qs_scale(self, other)
        return qs_mul(self, _coerce(other))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        return qs_pow(self, n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return qs_scale(self, Fraction(1, 1) / other)
        return qs_div(self, _coerce(other))

    def __rtruediv__(self, other):
        return qs_div(_coerce(other), self)

    # JSON wire format
    def to_json(self) -> dict:
        return {
            "order": _fmt(self._order),
            "terms": [[_fmt(e), _fmt(c)] for e, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "QSeries":
        return cls([(frac(e), frac(c)) for e, c in data["terms"]], _order(data["order"]))


def _coerce(x) -> QSeries:
    if isinstance(x, QSeries):
        return x
    if isinstance(x, (int, Fraction)):
        return QSeries.constant(x)
    raise TypeError(f"cannot combine QSeries with {type(x).__name__}")


@dataclass(frozen=True)
class SeriesDiff:
    """First disagreement between two series below their common order."""

    first_mismatch_exponent: Fraction | None
    lhs_coeff: Fraction = Fraction(0)
    rhs_coeff: Fraction = Fraction(0)
    order: Order = INF

    @property
    def agrees(self) -> bool:
        return self.first_mismatch_exponent is None

    def to_json(self):
        if self.first_mismatch_exponent is None:
            return None
        return {
            "exponent": _fmt(self.first_mismatch_exponent),
            "lhs": _fmt(self.lhs_coeff),
            "rhs": _fmt(self.rhs_coeff),
        }


# ---------------------------------------------------------------- ring ops


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    order = min(a.order, b.order)
    acc = {e: c for e, c in a.items() if e < order}
    for e, c in b.items():
        if e < order:
            acc[e] = acc.get(e, 0) + c
    return QSeries._raw({e: _norm(c) for e, c in sorted(acc.items()) if c != 0}, order)


def qs_neg(a: QSeries) -> QSeries:
    return QSeries._raw({e: -c for e, c in a.items()}, a.order)


def qs_sub(a: QSeries, b: QSeries) -> QSeries:
    return qs_add(a, qs_neg(b))


def qs_scale(a: QSeries, c: Number) -> QSeries:
    """Multiply every coefficient by the rational ``c``."""
    c = _norm(frac(c))
    if c == 0:
        return QSeries.zero(a.order)
    return QSeries._raw({e: _norm(v * c) for e, v in a.items()}, a.order)


def _lcm(values: Iterable[int]) -> int:
    return reduce(lambda x, y: x * y // math.gcd(x, y), values, 1)


def _product_order(a: QSeries, b: QSeries) -> Order:
    # a = A + O(q^Oa), b = B + O(q^Ob): the error terms A*O(q^Ob) and
    # B*O(q^Oa) start at v(a)+Ob and v(b)+Oa respectively.
    return min(a.order + b.valuation(), b.order + a.valuation())


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product, exact below a conservatively computed order."""
    order = _product_order(a, b)
    if a.is_zero() or b.is_zero():
        return QSeries.zero(order)
    if len(a) > len(b):
        a, b = b, a
    den = _lcm(e.denominator for e in (*a._terms, *b._terms))
    if order != INF:
        den = _lcm((den, Fraction(order).denominator))
        lim = Fraction(order) * den
    else:
        lim = None
    bt = [(int(e * den), c) for e, c in b.items()]
    acc: dict[int, Number] = {}
    for ea, ca in a.items():
        ia = int(ea * den)
        for ib, cb in bt:
            k = ia + ib
            if lim is not None and k >= lim:
                break
            acc[k] = acc.get(k, 0) + ca * cb
    terms = {Fraction(k, den): _norm(c) for k, c in sorted(acc.items()) if c != 0}
    return QSeries._raw(terms, order)


def qs_pow(a: QSeries, n: int) -> QSeries:
    if n < 0:
        return qs_pow(qs_inv(a), -n)
    result = QSeries.constant(1)
    base = a
    while n:
        if n & 1:
            result = qs_mul(result, base)
        n >>= 1
        if n:
            base = qs_mul(base, base)
    return result


def _exponent_step(exps: Iterable[Fraction]) -> Fraction:
    """Generator of the additive group spanned by ``exps``."""
    exps = list(exps)
    den = _lcm(e.denominator for e in exps)
    g = 0
    for e in exps:
        g = math.gcd(g, int(e * den))
    return Fraction(g, den)


def qs_inv(a: QSeries) -> QSeries:
    """Multiplicative inverse, factoring out the leading monomial ``c q**v``.

    With ``a = c q^v (1 + r)`` known to relative order ``order - v``, the
    inverse ``c^-1 q^-v (1 + r)^-1`` is known up to ``order - 2v``.
    """
    if a.is_zero():
        raise EmptySeries("cannot invert a series with no terms")
    v, c = a.leading()
    if a.order == INF and len(a) == 1:
        return QSeries._raw({-v: _norm(Fraction(1) / c)}, INF)
    if a.order == INF:
        raise ValueError("inverse of an exact non-monomial polynomial needs a truncation order; truncate it first")
    rel = a.order - v
    r = {e - v: Fraction(x) / c for e, x in a.items() if e != v}
    if not r:
        return QSeries._raw({-v: _norm(Fraction(1) / c)}, rel - v)
    step = _exponent_step(r)
    n = math.ceil(rel / step)
    rk = [(int(e / step), x) for e, x in r.items()]
    # dense long division on the lattice step*Z>=0
    b: list[Number] = [0] * n
    b[0] = 1
    for k in range(1, n):
        s = 0
        for j, x in rk:
            if j > k:
                break
            bj = b[k - j]
            if bj:
                s += x * bj
        b[k] = -s
    inv_c = Fraction(1) / c
    terms = {}
    for k, x in enumerate(b):
        if x:
            e = k * step - v
            terms[e] = _norm(x * inv_c)
    return QSeries._raw(terms, rel - v)


def qs_div(a: QSeries, b: QSeries) -> QSeries:
    return qs_mul(a, qs_inv(b))


def qs_scale_q(a: QSeries, m) -> QSeries:
    """Substitute ``q -> q**m`` for a positive rational ``m``."""
    m = frac(m)
    if m <= 0:
        raise ValueError("substitution exponent must be positive")
    order = a.order * m if a.order != INF else INF
    return QSeries._raw({e * m: c for e, c in a.items()}, order)


def frac_filter(s: QSeries, alpha) -> QSeries:
    """Keep the terms whose exponent has fractional part ``alpha``."""
    alpha = frac(alpha)
    if not 0 <= alpha < 1:
        raise ValueError("alpha must lie in [0, 1)")
    return QSeries._raw({e: c for e, c in s.items() if e - math.floor(e) == alpha}, s.order)


def qs_compare(a: QSeries, b: QSeries) -> SeriesDiff:
    """Compare below the common guaranteed order."""
    order = min(a.order, b.order)
    exps = sorted({e for e in a._terms if e < order} | {e for e in b._terms if e < order})
    for e in exps:
        ca = a._terms.get(e, 0)
        cb = b._terms.get(e, 0)
        if ca != cb:
            return SeriesDiff(e, Fraction(ca), Fraction(cb), order)
    return SeriesDiff(None, order=order)


# ------------------------------------------------------------ constructors


def _theta_exponent(x: Fraction, y: Fraction, n: int) -> Fraction:
    return x * n * (n + 1) / 2 + y * n * (n - 1) / 2


def theta_indices(x, y, order) -> Iterable[int]:
    """Integers ``n`` with ``x n(n+1)/2 + y n(n-1)/2 < order``."""
    x, y = frac(x), frac(y)
    if x + y <= 0:
        raise DivergentTheta(f"f(q^{x}, q^{y}) needs x + y > 0")
    order = frac(order)
    centre = math.floor((y - x) / (2 * (x + y)))
    out = []
    # exponent is convex in n with its minimum in [centre, centre + 1]
    for direction, n in ((1, centre + 1), (-1, centre)):
        while _theta_exponent(x, y, n) < order:
            out.append(n)
            n += direction
    return sorted(out)


def theta_f(x, y, order) -> QSeries:
    """Ramanujan's ``f(q**x, q**y)`` summed over every ``n`` below ``order``."""
    x, y = frac(x), frac(y)
    order = frac(order)
    terms: dict[Fraction, int] = {}
    for n in theta_indices(x, y, order):
        e = _theta_exponent(x, y, n)
        terms[e] = terms.get(e, 0) + 1
    return QSeries(terms, order)


def pochhammer_inf(a, step, order, sign: int = -1) -> QSeries:
    """Truncation of ``prod_{k>=0} (1 + sign * q**(a + k*step))``.

    ``sign=+1`` gives ``(-q**a; q**step)_inf``, ``sign=-1`` gives
    ``(q**a; q**step)_inf``.  Factors with nonpositive exponent are
    multiplied in exactly and the tail order is raised to compensate.
    """
    a, step, order = frac(a), frac(step), frac(order)
    if step <= 0:
        raise ValueError("step must be positive")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    head = []
    k = 0
    while a + k * step <= 0:
        head.append(a + k * step)
        k += 1
    shift = -sum(head, Fraction(0))  # total negative valuation of the head
    tail_order = order + shift
    # dense product over the lattice spanned by step and the first positive exponent
    first = a + k * step
    exps = []
    e = first
    while e < tail_order:
        exps.append(e)
        e += step
    if exps:
        g = _exponent_step(exps)
        n = math.ceil(tail_order / g)
        coeffs = [0] * n
        coeffs[0] = 1
        for e in exps:
            j = int(e / g)
            for i in range(n - 1, j - 1, -1):
                if coeffs[i - j]:
                    coeffs[i] += sign * coeffs[i - j]
        tail = QSeries._raw({i * g: c for i, c in enumerate(coeffs) if c}, tail_order)
    else:
        tail = QSeries.constant(1, tail_order)
    result = tail
    for e in head:
        result = qs_mul(result, QSeries([(0, 1), (e, sign)]))
    return result


def phi_series(order) -> QSeries:
    """``phi(q) = f(q, q) = sum q**(n*n)``."""
    return theta_f(1, 1, order)


def chi_series(order) -> QSeries:
    """``chi(q) = (-q; q**2)_inf``."""
    return pochhammer_inf(1, 2, order, sign=1)
