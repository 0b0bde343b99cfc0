"""Acceptance criteria 1-11, one PASS/FAIL line each.

Lines are printed in the pytest terminal summary (see conftest.py) and when
this file is run directly with ``python tests/test_acceptance.py``.
"""

import dataclasses
import time
from fractions import Fraction

import pytest

from nonic_theta import checks, nonic, verify
from nonic_theta import numeric as nm
from nonic_theta.puiseux import QSeries

RESULTS = {}

NONIC_IDS = [
    "nonic-i", "nonic-ii", "nonic-iii", "nonic-iv-v",
    "lemma-u3-i", "lemma-u3-ii", "lemma-u3-iii", "lemma-u3-iv",
    "lemma-p-i", "lemma-p-ii", "lemma-p-iii", "lemma-p-iv",
    "lemma-sum124-i", "lemma-sum124-ii", "lemma-bridge",
    "lemma-splits-i", "lemma-splits-ii", "lemma-splits-iii", "cor-reciprocal",
]
EXAMPLE_IDS = ["thm-1.2", "thm-1.3-i", "thm-1.3-ii", "thm-1.3-iii", "thm-1.3-iv",
               "thm-4.10", "thm-4.11", "thm-4.12", "thm-4.13", "thm-4.14"]


def _failed(reports):
    return [r.check_id for r in reports if not r.passed]


def c1():
    nonic._build_context.cache_clear()
    t0 = time.perf_counter()
    reps = [checks.run_check(cid, 60) for cid in NONIC_IDS]
    secs = time.perf_counter() - t0
    bad = _failed(reps)
    return not bad and secs < 60, f"{len(reps) - len(bad)}/{len(reps)} formal nonic checks at order 60 in {secs:.1f} s"


def c2():
    reps = [checks.run_check(cid, 60) for cid in ("septic-i", "septic-ii", "septic-iii")]
    bad = _failed(reps)
    return not bad, f"septic-i/ii/iii at order 60, failing: {bad or 'none'}"


def c3():
    rep = checks.run_check("triple-product", 60)
    return rep.passed, "theta_f vs product for (9,9) (11,7) (13,5) (15,3) (17,1) (1,1), order 60"


def c4():
    reps = [verify.verify_example(cid, 40) for cid in EXAMPLE_IDS]
    pipeline = max(verify.example_parts(cid, 40)["pipeline-vs-series"] for cid in ("thm-4.10", "thm-4.11", "thm-4.12"))
    ok = not _failed(reps) and pipeline < Fraction(1, 10**40)
    return ok, f"{len(reps) - len(_failed(reps))}/{len(reps)} examples at 40 digits, pipeline residual <= {float(pipeline):.1e}"


def c5():
    reps = [verify.cross_representation(cid, 40) for cid in ("thm-1.3-i", "thm-1.3-ii", "thm-1.3-iii", "thm-1.3-iv")]
    return not _failed(reps), "thm-1.3-i..iv vs thm-4.10..4.13 at 40 digits, worst " + max(r.residual for r in reps)


def c6():
    rep = verify.verify_invariants(40)
    return rep.passed, f"G_n for n in 1,3,9,27,81,243 and G_81, G_243 rebuilt, residual <= {rep.residual}"


def c7():
    rep = verify.verify_gamma_forms(80)
    return rep.passed, f"Gamma closed forms at 80 digits, residual <= {rep.residual}"


def c8():
    reps = [verify.verify_trig(cid, 50) for cid in sorted(verify.load_catalog().trig)]
    return not _failed(reps), f"{len(reps) - len(_failed(reps))}/{len(reps)} trigonometric identities at 50 digits"


def c9():
    rep = verify.verify_entry356(40)
    return rep.passed, f"50 random cubics, a=b=3, sqrt3 instance; worst residual <= {rep.residual}"


def c10():
    rep = verify.verify_ordering(30)
    return rep.passed, f"q = 0.05..0.5, u1,u2,u4 vs series at 30 digits, residual <= {rep.residual}"


def c11():
    flips = {}
    ctx = nonic.build_context(40)
    bad = dataclasses.replace(ctx, p=ctx.p + QSeries.monomial(1, 5))
    flips["bridge with p + q^5"] = not nonic.verify_u3_p_bridge(ctx=bad).passed
    bad = dataclasses.replace(ctx, u2=ctx.u2 + QSeries.monomial(1, 5))
    flips["root construction with u2 + q^5"] = not nonic.verify_root_construction(ctx=bad).passed
    spec = verify.load_catalog().examples["thm-4.10"]
    parts = verify.example_parts("thm-4.10", 40, {"u3": ["add", spec.defs["u3"], "1/" + "1" + "0" * 20]})
    flips["thm-4.10 with u3 + 1e-20"] = max(parts.values()) >= Fraction(1, 10**40)
    printed = verify.load_catalog().examples["thm-4.13"].erratum
    parts = verify.example_parts("thm-4.13", 40, printed)
    flips["thm-4.13 with printed c"] = max(parts.values()) >= Fraction(1, 10**40)
    saved = dict(nm.GAMMA_LITERALS)
    try:
        nm.GAMMA_LITERALS[Fraction(3, 4)] = str(Fraction(saved[Fraction(3, 4)]) + Fraction(1, 10**20))
        flips["Gamma(3/4) + 1e-20"] = not verify.verify_gamma_forms(40).passed
    finally:
        nm.GAMMA_LITERALS.clear()
        nm.GAMMA_LITERALS.update(saved)
    missed = [k for k, v in flips.items() if not v]
    return not missed, f"{len(flips) - len(missed)}/{len(flips)} perturbations flip to FAIL" + (f", missed: {missed}" if missed else "")


CRITERIA = [
    (1, "formal nonic suite", c1),
    (2, "formal septic suite", c2),
    (3, "triple product", c3),
    (4, "numeric examples and pipeline", c4),
    (5, "cross-representation agreement", c5),
    (6, "class invariants", c6),
    (7, "Gamma forms", c7),
    (8, "trigonometric catalog", c8),
    (9, "cubic entry property suite", c9),
    (10, "root-ordering robustness", c10),
    (11, "soundness guard", c11),
]


def line(num, name, ok, detail):
    return f"{'PASS' if ok else 'FAIL'}  criterion {num:>2}  {name}: {detail}"


@pytest.mark.parametrize("num, name, fn", CRITERIA, ids=[f"criterion-{n}" for n, _, _ in CRITERIA])
def test_criterion(num, name, fn):
    try:
        ok, detail = fn()
    except Exception as exc:  # an exception is a failed criterion, reported like one
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    RESULTS[num] = line(num, name, ok, detail)
    print(RESULTS[num])
    assert ok, RESULTS[num]


if __name__ == "__main__":
    for num, name, fn in CRITERIA:
        print(line(num, name, *fn()), flush=True)
