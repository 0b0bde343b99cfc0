import copy
import json
from fractions import Fraction

import pytest

from nonic_theta import verify

EXAMPLES = ["thm-1.2", "thm-1.3-i", "thm-1.3-ii", "thm-1.3-iii", "thm-1.3-iv",
            "thm-4.10", "thm-4.11", "thm-4.12", "thm-4.13", "thm-4.14"]
TINY = "1/" + "1" + "0" * 20  # 10^-20


@pytest.mark.parametrize("check_id", EXAMPLES)
def test_examples_at_40_digits(check_id):
    rep = verify.verify_example(check_id, 40)
    assert rep.passed, rep.summary_line()


@pytest.mark.parametrize("check_id", ["thm-4.10", "thm-4.11", "thm-4.12"])
def test_pipeline_reproduces_series(check_id):
    parts = verify.example_parts(check_id, 40)
    assert parts["pipeline-vs-series"] < Fraction(1, 10**40)


@pytest.mark.parametrize("check_id", ["thm-1.3-i", "thm-1.3-ii", "thm-1.3-iii", "thm-1.3-iv"])
def test_cross_representations(check_id):
    assert verify.cross_representation(check_id, 40).passed


def test_printed_erratum_constant_fails():
    spec = verify.load_catalog().examples["thm-4.13"]
    parts = verify.example_parts("thm-4.13", 40, defs_override=spec.erratum)
    assert parts["series-vs-closed-form"] > Fraction(1, 10**4)
    assert parts["root-alpha"] > 1


def test_perturbed_constant_fails():
    spec = verify.load_catalog().examples["thm-4.10"]
    bumped = {"u3": ["add", spec.defs["u3"], TINY]}
    parts = verify.example_parts("thm-4.10", 40, defs_override=bumped)
    assert max(parts.values()) >= Fraction(1, 10**40)


@pytest.mark.parametrize("check_id", sorted(verify.load_catalog().trig))
def test_trig_at_50_digits(check_id):
    assert verify.verify_trig(check_id, 50).passed


def test_unknown_ids():
    with pytest.raises(verify.CatalogMiss):
        verify.verify_example("thm-9.99", 20)
    with pytest.raises(verify.CatalogMiss):
        verify.verify_trig("trig-none", 20)


def test_catalog_override(tmp_path, monkeypatch):
    raw = json.loads(verify.catalog_path().read_text())
    broken = copy.deepcopy(raw)
    for entry in broken["trig"]:
        if entry["id"] == "trig-cos-sum":
            entry["rhs"] = ["add", entry["rhs"], TINY]
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps(broken))
    monkeypatch.setenv(verify.DATA_ENV, str(path))
    assert verify.catalog_path() == path
    rep = verify.verify_trig("trig-cos-sum", 40)
    assert not rep.passed
    assert Fraction(rep.residual) > Fraction(1, 10**21)


@pytest.mark.parametrize(
    "fn",
    [verify.verify_invariants, verify.verify_invariant_relations, verify.verify_ordering,
     verify.verify_restated, verify.verify_entry356, verify.verify_septic_numeric],
    ids=lambda f: f.__name__,
)
def test_numeric_suites(fn):
    rep = fn(40)
    assert rep.passed, rep.summary_line()


def test_septic_unique_arrangement():
    parts = verify.septic_parts(Fraction(3, 10), 40)
    assert parts["roots-give-uvw"] < Fraction(1, 10**40)


def test_entry_samples_are_deterministic():
    assert verify.entry356_samples(5) == verify.entry356_samples(5)
    assert len(verify.entry356_samples()) == 50


def test_failing_parts_named():
    rep = verify._report("x", {"good": Fraction(0), "bad": Fraction(1)}, 10, "")
    assert not rep.passed and "bad" in rep.reason and "good" not in rep.reason
