"""Machine-readable outcome of a single identity check."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .puiseux import _fmt, frac

PASS = "pass"
FAIL = "fail"


@dataclass(frozen=True)
class CheckReport:
    """Result of one check.

    Formal checks carry ``order`` and ``mismatch``; numeric checks carry
    ``digits`` and ``residual`` (a decimal upper bound on the discrepancy).
    """

    check_id: str
    status: str
    kind: str = "formal"
    order: Optional[Fraction] = None
    digits: Optional[int] = None
    mismatch: Optional[dict] = None
    residual: Optional[str] = None
    form: str = ""
    reason: Optional[str] = None
    ms: int = 0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def order_or_digits(self):
        return self.order if self.kind == "formal" else self.digits

    def with_elapsed(self, ms: int) -> "CheckReport":
        return replace(self, ms=int(ms))

    def to_json(self) -> dict:
        out = {"id": self.check_id, "status": self.status, "kind": self.kind}
        if self.kind == "formal":
            out["order"] = None if self.order is None else _fmt(self.order)
            out["mismatch"] = self.mismatch
        else:
            out["digits"] = self.digits
            out["residual"] = self.residual
        out["form"] = self.form
        if self.reason is not None:
            out["reason"] = self.reason
        out["ms"] = self.ms
        return out

    @classmethod
    def from_json(cls, data: dict) -> "CheckReport":
        kind = data.get("kind", "formal")
        order = data.get("order")
        return cls(
            check_id=data["id"],
            status=data["status"],
            kind=kind,
            order=None if order is None else frac(order),
            digits=data.get("digits"),
            mismatch=data.get("mismatch"),
            residual=data.get("residual"),
            form=data.get("form", ""),
            reason=data.get("reason"),
            ms=int(data.get("ms", 0)),
        )

    def summary_line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        if self.kind == "formal":
            where = f"order={self.order}"
        else:
            where = f"digits={self.digits}"
        line = f"{tag}  {self.check_id:<28} {where:<14} {self.ms:>6} ms"
        if not self.passed:
            if self.mismatch:
                m = self.mismatch
                label = f" [{m['label']}]" if "label" in m else ""
                line += f"\n      first mismatch{label} at q^{m['exponent']}: lhs={m['lhs']} rhs={m['rhs']}"
            if self.residual is not None:
                line += f"\n      residual <= {self.residual}"
            if self.reason:
                line += f"\n      reason: {self.reason}"
        return line


def formal_report(check_id: str, comparisons, form: str = "") -> CheckReport:
    """Build a report from ``(label, SeriesDiff)`` pairs; fails on the first mismatch."""
    order = None
    mismatch = None
    for label, diff in comparisons:
        order = diff.order if order is None else min(order, diff.order)
        if mismatch is None and not diff.agrees:
            mismatch = dict(diff.to_json(), label=label)
    status = PASS if mismatch is None else FAIL
    return CheckReport(check_id, status, "formal", order=order, mismatch=mismatch, form=form)


def numeric_report(check_id: str, residual_bound, digits: int, form: str = "") -> CheckReport:
    """Pass iff the rigorous upper bound on ``|lhs - rhs|`` is below ``10**-digits``."""
    from .hpreal import decimal_upper

    ok = residual_bound < Fraction(1, 10**digits)
    return CheckReport(
        check_id,
        PASS if ok else FAIL,
        "numeric",
        digits=digits,
        residual=decimal_upper(residual_bound),
        form=form,
    )


@contextmanager
def stopwatch():
    box = {"ms": 0}
    t0 = time.perf_counter()
    try:
        yield box
    finally:
        box["ms"] = int((time.perf_counter() - t0) * 1000)
