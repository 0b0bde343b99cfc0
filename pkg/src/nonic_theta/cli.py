"""Command line front end: ``nonic-theta verify | series | eval``."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import metadata

from . import checks, nonic, numeric, verify
from .hpreal import context_for
from .puiseux import QSeries, _fmt, chi_series, frac, theta_f
from .report import CheckReport

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "0.0.0"


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    order: Fraction = Fraction(60)
    digits: int = 50
    check_filter: tuple | str = "all"
    output: str = "text"
    parallelism: int = 1

    def __post_init__(self):
        if self.digits < 10:
            raise UsageError("--digits must be at least 10")
        if self.order < 10:
            raise UsageError("--order must be at least 10")
        if self.parallelism < 1:
            raise UsageError("--parallelism must be at least 1")
        if self.output not in ("text", "json"):
            raise UsageError(f"unknown output mode {self.output!r}")

    def selected(self) -> list[str]:
        known = checks.registry()
        if self.check_filter == "all":
            return list(known)
        unknown = [c for c in self.check_filter if c not in known]
        if unknown:
            raise checks.UnknownCheck(", ".join(unknown))
        return sorted(set(self.check_filter))

    def to_json(self) -> dict:
        filt = self.check_filter if self.check_filter == "all" else list(self.check_filter)
        return {"order": _fmt(self.order), "digits": self.digits, "checks": filt,
                "output": self.output, "parallelism": self.parallelism}


@dataclass(frozen=True)
class SuiteReport:
    reports: list
    config: dict
    version: str = field(default_factory=version)

    @property
    def summary(self) -> dict:
        passed = sum(r.passed for r in self.reports)
        return {"total": len(self.reports), "passed": passed, "failed": len(self.reports) - passed}

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_json(self) -> dict:
        return {"version": self.version, "config": self.config, "summary": self.summary,
                "reports": [r.to_json() for r in self.reports]}

    @classmethod
    def from_json(cls, data: dict) -> "SuiteReport":
        return cls([CheckReport.from_json(r) for r in data["reports"]], data["config"], data["version"])


def _run_one(args):
    check_id, order, digits = args
    return checks.run_check(check_id, order, digits)


def cmd_verify(config: RunConfig) -> SuiteReport:
    ids = config.selected()
    jobs = [(cid, config.order, config.digits) for cid in ids]
    if config.parallelism > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            reports = list(pool.map(_run_one, jobs))
    else:
        reports = [_run_one(j) for j in jobs]
    return SuiteReport(reports, config.to_json())


# ------------------------------------------------------------------ series
def _septic_p(order):
    return nonic.build_septic(order).p


SERIES = {
    "phi": lambda order: nonic.phi_at(1, order),
    "chi": chi_series,
    "u1": lambda order: nonic.build_context(order).u1,
    "u2": lambda order: nonic.build_context(order).u2,
    "u3": lambda order: nonic.build_context(order).u3,
    "u4": lambda order: nonic.build_context(order).u4,
    "p": lambda order: nonic.build_context(order).p,
    "septic-p": _septic_p,
}


def cmd_series(expr_id: str, order) -> QSeries:
    order = frac(order)
    if expr_id.startswith("theta:"):
        try:
            x, y = (frac(s) for s in expr_id[len("theta:"):].split("/"))
        except ValueError:
            raise UsageError(f"theta needs the form theta:x/y, got {expr_id!r}") from None
        return theta_f(x, y, order)
    if expr_id not in SERIES:
        raise UsageError(f"unknown series {expr_id!r}; choose from {', '.join(SERIES)} or theta:x/y")
    return SERIES[expr_id](order).truncate(order)


# -------------------------------------------------------------------- eval
G_FORMS = {
    1: "1",
    3: "2^(1/12)",
    9: "(2+sqrt3)^(1/6)",
    27: "2^(1/12) / (2^(1/3)-1)^(1/3)",
    81: "((2(sqrt3+1))^(1/3)+1)^(1/3) / ((2(sqrt3-1))^(1/3)-1)^(1/3)",
    243: "2^(1/12) (2^(1/3)+2^(2/3)+3^(1/3)) / (9-2*3^(4/3))^(1/3)",
}


def cmd_eval(target: str, digits: int) -> dict:
    kind, _, arg = target.partition(":")
    if not arg:
        raise UsageError(f"target must look like kind:arg, got {target!r}")
    closed = None
    if kind == "G":
        inv = numeric.class_invariant(frac(arg), digits)
        value = inv.value
        m, reflected = numeric._canonical(arg)
        closed = G_FORMS[m] if not reflected else f"1 / ({G_FORMS[m]})"
    elif kind in ("p", "u3"):
        p, u3 = numeric.p_u3_from_invariants(frac(arg), digits)
        value = p if kind == "p" else u3
        closed = f"from G_n, G_9n, G_81n at n={arg}"
    elif kind == "phi-ratio":
        try:
            spec = verify._lookup(verify.load_catalog().examples, arg)
        except verify.CatalogMiss:
            raise UsageError(f"no catalogued example {arg!r}") from None
        _, value, rhs = verify._eval_spec(spec, digits)
        closed = {"value": rhs.to_str(digits), "title": spec.title}
    else:
        raise UsageError(f"unknown target kind {kind!r}; use G, p, u3 or phi-ratio")
    return {
        "target": target,
        "digits": digits,
        "value": value.to_str(digits),
        "error_bound_exponent": _error_exponent(value),
        "closed_form": closed,
    }


def _error_exponent(value) -> int | None:
    err = value.abs_error
    if err == 0:
        return None
    return int(value.ctx.floor(value.ctx.log10(err))) + 1


# -------------------------------------------------------------------- main
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nonic-theta", description="Verify nonic theta identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run checks")
    sel = v.add_mutually_exclusive_group(required=True)
    sel.add_argument("--all", action="store_true", help="run every check")
    sel.add_argument("--check", action="append", metavar="ID", help="run one check (repeatable)")
    v.add_argument("--order", type=frac, default=Fraction(nonic.DEFAULT_ORDER), help="truncation order, num/den")
    v.add_argument("--digits", type=int, default=50)
    v.add_argument("--json", action="store_true")
    v.add_argument("--parallelism", type=int, default=1)

    s = sub.add_parser("series", help="print a named series as JSON")
    s.add_argument("expr_id")
    s.add_argument("--order", type=frac, default=Fraction(20))
    s.add_argument("--pretty", action="store_true", help="human-readable instead of JSON")

    e = sub.add_parser("eval", help="evaluate a constant with an error bound")
    e.add_argument("target")
    e.add_argument("--digits", type=int, default=50)

    sub.add_parser("list", help="list check ids")
    return parser


def _print_suite(suite: SuiteReport, as_json: bool, out) -> None:
    if as_json:
        json.dump(suite.to_json(), out, indent=2)
        out.write("\n")
        return
    for rep in suite.reports:
        print(rep.summary_line(), file=out)
    s = suite.summary
    print(f"\n{s['passed']}/{s['total']} passed, {s['failed']} failed", file=out)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "verify":
            config = RunConfig(
                order=args.order,
                digits=args.digits,
                check_filter="all" if args.all else tuple(args.check),
                output="json" if args.json else "text",
                parallelism=args.parallelism,
            )
            suite = cmd_verify(config)
            _print_suite(suite, args.json, out)
            return EXIT_OK if suite.all_passed else EXIT_FAIL
        if args.command == "series":
            series = cmd_series(args.expr_id, args.order)
            if args.pretty:
                print(series.pretty(max_terms=10**6), file=out)
            else:
                print(json.dumps(series.to_json()), file=out)
            return EXIT_OK
        if args.command == "eval":
            context_for(args.digits)
            print(json.dumps(cmd_eval(args.target, args.digits), indent=2), file=out)
            return EXIT_OK
        for cid, check in checks.registry().items():
            print(f"{cid:<28} {check.kind}", file=out)
        return EXIT_OK
    except checks.UnknownCheck as exc:
        print(f"error: unknown check id: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, numeric.UnsupportedInvariant) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
