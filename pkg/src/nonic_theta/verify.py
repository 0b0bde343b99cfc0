"""Numeric checks: catalogued closed forms, invariants, cubic pipelines.

Every check returns a :class:`CheckReport` whose residual is a rigorous upper
bound on the worst discrepancy among its parts.
"""

from __future__ import annotations

import itertools
import json
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

from . import cubicalg as ca
from . import numeric as nm
from .expr import evaluate, evaluate_defs
from .hpreal import GUARD_DIGITS, context_for, hp, residual_bound
from .puiseux import frac
from .report import FAIL, CheckReport, numeric_report

DATA_ENV = "NONIC_THETA_DATA"


class CatalogMiss(KeyError):
    """Unknown catalog id."""


# ------------------------------------------------------------- catalog
@dataclass(frozen=True)
class ExampleSpec:
    id: str
    title: str
    n: Fraction | None
    lhs: object
    rhs: object
    defs: dict = field(default_factory=dict)
    cubic: dict | None = None
    pipeline: dict | None = None
    same_value_as: str | None = None
    erratum: dict | None = None

    @classmethod
    def from_json(cls, d: dict) -> "ExampleSpec":
        return cls(
            id=d["id"],
            title=d.get("title", ""),
            n=None if d.get("n") is None else frac(d["n"]),
            lhs=d["lhs"],
            rhs=d["rhs"],
            defs=dict(d.get("defs", {})),
            cubic=d.get("cubic"),
            pipeline=d.get("pipeline"),
            same_value_as=d.get("same_value_as"),
            erratum=d.get("erratum"),
        )


@dataclass(frozen=True)
class Catalog:
    examples: dict
    trig: dict
    gamma: dict


def catalog_path() -> Path:
    override = os.environ.get(DATA_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("nonic_theta") / "data" / "catalog.json"))


@lru_cache(maxsize=8)
def _load(path: str) -> Catalog:
    raw = json.loads(Path(path).read_text())

    def index(items):
        return {d["id"]: ExampleSpec.from_json(d) for d in items}

    return Catalog(index(raw.get("examples", [])), index(raw.get("trig", [])), index(raw.get("gamma", [])))


def load_catalog() -> Catalog:
    return _load(str(catalog_path()))


def _lookup(section: dict, check_id: str) -> ExampleSpec:
    try:
        return section[check_id]
    except KeyError:
        raise CatalogMiss(check_id) from None


# -------------------------------------------------------------- helpers
def _report(check_id: str, parts: dict, digits: int, form: str) -> CheckReport:
    """Combine named residual bounds; the worst one decides."""
    worst = max(parts.values()) if parts else Fraction(0)
    rep = numeric_report(check_id, worst, digits, form)
    if not rep.passed:
        tol = Fraction(1, 10**digits)
        bad = ", ".join(k for k, v in parts.items() if v >= tol)
        rep = CheckReport(**{**rep.__dict__, "reason": f"parts over tolerance: {bad}"})
    return rep


def _failed(check_id: str, digits: int, form: str, exc: Exception) -> CheckReport:
    return CheckReport(check_id, FAIL, "numeric", digits=digits, form=form,
                       reason=f"{type(exc).__name__}: {exc}")


def _eval_spec(spec: ExampleSpec, digits: int, defs_override: dict | None = None):
    ctx = context_for(digits)
    defs = dict(spec.defs)
    if defs_override:
        defs.update(defs_override)
    env = evaluate_defs(defs, ctx)
    return env, evaluate(spec.lhs, ctx, env), evaluate(spec.rhs, ctx, env)


# ------------------------------------------------------------- examples
def pipeline_value(n, scale_expr, digits: int):
    """scale * (1 + u1 + u2 + u3 + u4) rebuilt from class invariants alone."""
    ctx = context_for(digits)
    p, u3 = nm.p_u3_from_invariants(n, digits)
    roots = ca.solve_cubic_real(ca.nonic_cubic(u3, p), digits)
    triple = ca.order_roots(roots, p)
    u1, u2, u4 = ca.u124_from_roots(triple, p)
    scale = evaluate(scale_expr, ctx)
    return scale * (1 + u1 + u2 + u3 + u4), triple


def example_parts(check_id: str, digits: int = 40, defs_override: dict | None = None) -> dict:
    """Named residual bounds for one catalogued evaluation."""
    spec = _lookup(load_catalog().examples, check_id)
    env, lhs, rhs = _eval_spec(spec, digits, defs_override)
    parts = {"series-vs-closed-form": residual_bound(lhs, rhs)}
    if spec.cubic:
        u3, p = env[spec.cubic["u3"]], env[spec.cubic["p"]]
        cubic = ca.nonic_cubic(u3, p)
        zero = hp(0, lhs.ctx)
        roots = [env[name] for name in spec.cubic["roots"]]
        for name, r in zip(spec.cubic["roots"], roots):
            parts[f"root-{name}"] = residual_bound(cubic(r), zero)
        if spec.n is not None:
            p_ref, u3_ref = nm.p_u3_from_invariants(spec.n, digits, cross_check=False)
            parts["p-vs-invariants"] = residual_bound(p, p_ref)
            parts["u3-vs-invariants"] = residual_bound(u3, u3_ref)
        # the stated arrangement must be the one the ordering conditions pick
        try:
            chosen = ca.order_roots(list(reversed(roots)), p)
            parts["stated-order"] = max(residual_bound(a, b) for a, b in zip(chosen.as_tuple(), roots))
        except (ca.NoValidOrder, ca.AmbiguousOrder, ValueError):
            parts["stated-order"] = Fraction(1)
    if spec.pipeline:
        value, _ = pipeline_value(spec.n, spec.pipeline["scale"], digits)
        parts["pipeline-vs-series"] = residual_bound(value, lhs)
    return parts


def verify_example(check_id: str, digits: int = 40) -> CheckReport:
    """Series quotient against its closed form, plus root and pipeline checks."""
    form = "phi-ratio by series vs closed form"
    try:
        parts = example_parts(check_id, digits)
    except CatalogMiss:
        raise
    except Exception as exc:  # precision or ordering failures become a failing report
        return _failed(check_id, digits, form, exc)
    return _report(check_id, parts, digits, form)


def cross_representation(check_id: str, digits: int = 40) -> CheckReport:
    """Closed form of ``check_id`` against the closed form it is paired with."""
    cat = load_catalog()
    spec = _lookup(cat.examples, check_id)
    if spec.same_value_as is None:
        raise CatalogMiss(f"{check_id} has no paired representation")
    other = _lookup(cat.examples, spec.same_value_as)
    _, _, a = _eval_spec(spec, digits)
    _, _, b = _eval_spec(other, digits)
    return numeric_report(f"cross:{check_id}:{other.id}", residual_bound(a, b), digits,
                          form="two closed forms of one phi-ratio")


# ---------------------------------------------------------- trig, gamma
def verify_trig(check_id: str, digits: int = 50) -> CheckReport:
    spec = _lookup(load_catalog().trig, check_id)
    _, lhs, rhs = _eval_spec(spec, digits)
    return numeric_report(check_id, residual_bound(lhs, rhs), digits, form=spec.title)


def verify_gamma_forms(digits: int = 80) -> CheckReport:
    """phi(e^{-pi}) and phi(e^{-pi sqrt3}) against their Gamma closed forms."""
    limit = nm.GAMMA_DIGITS - GUARD_DIGITS
    if digits > limit:
        raise nm.RequestedPrecisionExceedsConstants(f"at most {limit} digits are supported")
    parts = {}
    for spec in load_catalog().gamma.values():
        _, lhs, rhs = _eval_spec(spec, digits)
        parts[spec.id] = residual_bound(lhs, rhs)
    return _report("gamma-forms", parts, digits, "series vs Gamma closed forms")


# ------------------------------------------------------ invariant checks
TABLE_N = (Fraction(1, 9), Fraction(1, 3), Fraction(1, 27), Fraction(1, 81), Fraction(1, 243))


def invariant_parts(digits: int = 40) -> dict:
    parts = {}
    for n in nm.SUPPORTED_INVARIANTS:
        closed = nm.class_invariant(n, digits, check=False).value
        parts[f"G{n}-definition"] = residual_bound(closed, nm.invariant_from_definition(n, digits))
    for n in (81, 243):
        table = nm.class_invariant(n, digits, check=False).value
        parts[f"G{n}-product-relation"] = residual_bound(table, nm.class_invariant(n, digits, "formula", False).value)
    return parts


def verify_invariants(digits: int = 40) -> CheckReport:
    return _report("class-invariants", invariant_parts(digits), digits,
                   "closed-form G_n vs 2^(-1/4) q^(-1/24) chi(q); G_81, G_243 via the product relation")


def verify_invariant_relations(digits: int = 40) -> CheckReport:
    """9n-ratio and (p, u3) formulas against direct series for each example row."""
    parts = {}
    for n in TABLE_N + (Fraction(1), Fraction(3), Fraction(9), Fraction(27)):
        closed = nm.ratio_9n(n, digits, cross_check=False)
        series = nm.phi_exp(81 * n, digits) / nm.phi_exp(n, digits)
        parts[f"ratio9n-{n}"] = residual_bound(closed, series)
    for n in TABLE_N:
        p, u3 = nm.p_u3_from_invariants(n, digits, cross_check=False)
        p_ref, u3_ref = nm.p_u3_from_chi(n, digits)
        parts[f"p-{n}"] = residual_bound(p, p_ref)
        parts[f"u3-{n}"] = residual_bound(u3, u3_ref)
    return _report("invariant-relations", parts, digits, "9n-ratio and p/u3 from G_n vs series")


# ------------------------------------------------------- cubic checks
ORDERING_QS = tuple(Fraction(k, 20) for k in range(1, 11))


def ordering_parts(q0, digits: int = 30) -> dict:
    """Series-derived cubic at real q: ordering, u's, and the ratio identities."""
    ctx = context_for(digits)
    q = hp(frac(q0), ctx)
    u1, u2, u3, u4 = (nm.eval_u(k, q, digits) for k in (1, 2, 3, 4))
    p = u1 * u2 * u4
    roots = ca.solve_cubic_real(ca.nonic_cubic(u3, p), digits)
    shuffled = list(roots)
    random.Random(str(q0)).shuffle(shuffled)
    t = ca.order_roots(shuffled, p)
    v1, v2, v4 = ca.u124_from_roots(t, p)
    a, b, g = t.as_tuple()
    parts = {
        "u1": residual_bound(v1, u1),
        "u2": residual_bound(v2, u2),
        "u4": residual_bound(v4, u4),
        "ratio-sum": residual_bound(b / a + g / b + a / g, (u3**3 + 4) / u3**2),
        "reverse-ratio-sum": residual_bound(a / b + b / g + g / a,
                                            (u3**4 - u3**3 + 6 * u3**2 - 8 * u3 + 8) / u3**3),
        "cube-gap": residual_bound(p / u1**3 + p / u2**3 + p / u4**3,
                                   ((2 - u3) / u3) ** 3 + (u1**3 + u2**3 + u4**3) / p),
    }
    chain = [2 - u1, u1 - u2, u2 - u3, u3 - u4, u4]
    parts["monotone-chain"] = Fraction(0) if all(x.is_positive() for x in chain) else Fraction(1)
    return parts


def verify_ordering(digits: int = 30) -> CheckReport:
    parts = {}
    for q0 in ORDERING_QS:
        for name, v in ordering_parts(q0, digits).items():
            parts[f"q={q0}:{name}"] = v
    return _report("root-ordering", parts, digits, "order_roots on series cubics vs direct u_k")


def verify_restated(digits: int = 40) -> CheckReport:
    """Restated nonic value from (u3, p) against series at q = 1/10 and q = e^{-pi/3}."""
    ctx = context_for(digits)
    q = hp(Fraction(1, 10), ctx)
    u3, p = nm.eval_u(3, q, digits), nm.eval_p(q, digits)
    direct = nm.eval_phi(q ** Fraction(1, 9), digits) / nm.eval_phi(q**9, digits)
    rv = ca.nonic_restated_eval(u3, p, digits)
    series_sum = nm.eval_u(1, q, digits) + nm.eval_u(2, q, digits) + nm.eval_u(4, q, digits)
    rv_series = ca.nonic_restated_eval(u3, p, digits, reference_sum=series_sum)
    p9, u39 = nm.p_u3_from_invariants(Fraction(1, 9), digits, cross_check=False)
    rv9 = ca.nonic_restated_eval(u39, p9, digits)
    ratio = 3 * hp(3, ctx).sqrt() * nm.phi_exp(729, digits) / nm.phi_exp(9, digits)
    parts = {
        "q=1/10": residual_bound(rv.value, direct),
        "q=1/10 series-selector": residual_bound(rv_series.value, direct),
        "q=e^(-pi/3)": residual_bound(rv9.value, ratio),
        "y-inversion": residual_bound((rv.value - 1 - u3) ** 3 / p, rv.y),
    }
    return _report("restated-nonic", parts, digits, "1 + u3 + (p y)^(1/3) vs series")


ENTRY356_SAMPLES = 50


def entry356_samples(count: int = ENTRY356_SAMPLES, seed: int = 356):
    """(a, b) pairs with three real roots: pick r1, r2, set r3 = 1/(r1 r2)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        r1 = Fraction(rng.randint(-5000, 5000), 1000)
        r2 = Fraction(rng.randint(-5000, 5000), 1000)
        if r1 == 0 or r2 == 0:
            continue
        r3 = 1 / (r1 * r2)
        if len({r1, r2, r3}) < 3:
            continue
        out.append((r1 + r2 + r3, r1 * r2 + r2 * r3 + r3 * r1))
    return out


def verify_entry356(digits: int = 40) -> CheckReport:
    ctx = context_for(digits)
    parts = {}
    for i, (a, b) in enumerate(entry356_samples()):
        res = ca.entry356_check(a, b, digits)
        parts[f"sample-{i}"] = res.worst()
    triple = ca.entry356_check(3, 3, digits)
    parts["a=b=3"] = triple.worst()
    parts["a=b=3:t=6"] = residual_bound(triple.t, hp(6, ctx))
    r3 = hp(3, ctx).sqrt()
    res = ca.entry356_check(3 * (1 + r3), 3 * (1 + 2 * r3), digits)
    g9 = nm.class_invariant(9, digits, check=False).value
    s2 = hp(2, ctx).sqrt()
    target = (3 * s2 * r3 * g9**3 + 9 * s2 * g9 + 9 * g9**2).cbrt()
    parts["sqrt3-instance"] = max(res.worst(), residual_bound(res.cube_root_sum, target))
    return _report("entry356", parts, digits, "cubic entry: quadratic, t-cubic, sextic, cube-root sum")


# ---------------------------------------------------------------- septic
SEPTIC_QS = (Fraction(1, 10), Fraction(3, 10), Fraction(7, 10))


def septic_parts(q0, digits: int = 40) -> dict:
    ctx = context_for(digits)
    q = hp(frac(q0), ctx)
    u, v, w = (nm.eval_u(k, q, digits, modulus=7) for k in (1, 2, 3))
    p = u * v * w
    r4 = (nm.eval_phi(q, digits) / nm.eval_phi(q**7, digits)) ** 4
    cubic = ca.Cubic(2 * (1 + 3 * p - r4), p * p * (p + 4), -(p**4))
    roots = ca.solve_cubic_real(cubic, digits)
    best = None
    for a, b, g in itertools.permutations(roots):
        cand = ((a * a * p / b).root(7), (b * b * p / g).root(7), (g * g * p / a).root(7))
        err = max(residual_bound(x, y) for x, y in zip(cand, (u, v, w)))
        best = err if best is None else min(best, err)
    direct = nm.eval_phi(q ** Fraction(1, 7), digits) / nm.eval_phi(q**7, digits)
    return {"roots-give-uvw": best, "phi-sum": residual_bound(1 + u + v + w, direct)}


def verify_septic_numeric(digits: int = 40) -> CheckReport:
    parts = {}
    for q0 in SEPTIC_QS:
        for name, val in septic_parts(q0, digits).items():
            parts[f"q={q0}:{name}"] = val
    return _report("septic-iv-v", parts, digits, "u, v, w from the roots of the septic cubic")


def numeric_checks() -> dict:
    """Check id -> callable(digits) returning a CheckReport."""
    cat = load_catalog()
    checks = {}
    for cid in cat.examples:
        checks[cid] = (lambda c: lambda digits: verify_example(c, digits))(cid)
    for cid, spec in cat.examples.items():
        if spec.same_value_as:
            name = f"cross-{cid}"
            checks[name] = (lambda c, nm_: lambda digits: _renamed(cross_representation(c, digits), nm_))(cid, name)
    for cid in cat.trig:
        checks[cid] = (lambda c: lambda digits: verify_trig(c, digits))(cid)
    checks["gamma-forms"] = lambda digits: verify_gamma_forms(min(digits, nm.GAMMA_DIGITS - GUARD_DIGITS))
    checks["class-invariants"] = verify_invariants
    checks["invariant-relations"] = verify_invariant_relations
    checks["root-ordering"] = verify_ordering
    checks["restated-nonic"] = verify_restated
    checks["entry356"] = verify_entry356
    checks["septic-iv-v"] = verify_septic_numeric
    checks["septic-vi"] = lambda digits: _renamed(verify_example("thm-1.2", digits), "septic-vi")
    return checks


def _renamed(rep: CheckReport, check_id: str) -> CheckReport:
    return CheckReport(**{**rep.__dict__, "check_id": check_id})
