"""Single registry of every check, formal and numeric, addressed by id."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import nonic, verify
from .puiseux import frac, pochhammer_inf, qs_compare, theta_f
from .report import CheckReport, formal_report, stopwatch

TRIPLE_PRODUCT_PAIRS = ((9, 9), (11, 7), (13, 5), (15, 3), (17, 1), (1, 1))


class UnknownCheck(KeyError):
    pass


def verify_triple_product(order=nonic.DEFAULT_ORDER, pairs=TRIPLE_PRODUCT_PAIRS) -> CheckReport:
    """f(q^x, q^y) against (-q^x; q^(x+y))(-q^y; q^(x+y))(q^(x+y); q^(x+y))."""
    order = frac(order)
    comparisons = []
    for x, y in pairs:
        s = x + y
        prod = pochhammer_inf(x, s, order, 1) * pochhammer_inf(y, s, order, 1) * pochhammer_inf(s, s, order, -1)
        comparisons.append((f"{x}/{y}", qs_compare(theta_f(x, y, order), prod)))
    return formal_report("triple-product", comparisons, form="sum form vs three-factor product")


@dataclass(frozen=True)
class Check:
    id: str
    kind: str  # formal | numeric
    run: Callable

    def __call__(self, order=nonic.DEFAULT_ORDER, digits: int = 50) -> CheckReport:
        with stopwatch() as sw:
            rep = self.run(frac(order) if self.kind == "formal" else digits)
        return rep.with_elapsed(sw["ms"])


def registry() -> dict[str, Check]:
    out = {cid: Check(cid, "formal", fn) for cid, fn in nonic.formal_checks().items()}
    out["triple-product"] = Check("triple-product", "formal", verify_triple_product)
    for cid, fn in verify.numeric_checks().items():
        out[cid] = Check(cid, "numeric", fn)
    return dict(sorted(out.items()))


def get(check_id: str) -> Check:
    checks = registry()
    if check_id not in checks:
        raise UnknownCheck(check_id)
    return checks[check_id]


def run_check(check_id: str, order=nonic.DEFAULT_ORDER, digits: int = 50) -> CheckReport:
    """Run one check; internal precision failures come back as failing reports."""
    check = get(check_id)
    try:
        return check(order, digits)
    except (ArithmeticError, ValueError) as exc:
        kind = check.kind
        return CheckReport(check_id, "fail", kind,
                           order=frac(order) if kind == "formal" else None,
                           digits=digits if kind == "numeric" else None,
                           reason=f"{type(exc).__name__}: {exc}")
