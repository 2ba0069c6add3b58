import pytest

from engine.errors import StructuralError
from engine.inverses.equations import EQ1
from engine.oracle.catalog import CATALOG, get_theorem, theorem_ids
from engine.oracle.verify import brute_force_set, resolve_theorems, verify, verify_many
from engine.ring.core import ring_for
from engine.runtime import verify_status


def test_catalog_entries_are_well_formed():
    ids = theorem_ids()
    assert len(ids) == len(set(ids)) == len(CATALOG)
    for tid in ids:
        summary = get_theorem(tid).summary()
        assert summary["id"] == tid
        assert summary["statement"] and summary["scope"]
        assert "check" not in summary


def test_invertible_lemma_on_z6(z6):
    report = verify("T-invertible-lemma", z6)
    assert report.status == "pass"
    assert report.cases_checked == 6
    assert report.counterexample is None


@pytest.mark.parametrize("spec,cases", [("zn:6", 36), ("m2f2", 256)])
def test_inner_projector_descriptions(spec, cases):
    report = verify("T-1I-projectors", ring_for(spec))
    assert report.status == "pass" and report.cases_checked == cases


def test_entries_outside_their_scope_are_skipped(z6, m2q):
    report = verify("T-involution-laws", z6)
    assert report.status == "skipped" and report.passed
    assert report.reason == "Z6 has no involution"
    assert verify("T-idempotent-equality", m2q).status == "skipped"


def test_case_budget_marks_the_run_incomplete(m2f2):
    report = verify("T-1I-projectors", m2f2, max_cases=1)
    assert report.status == "incomplete"
    assert report.cases_checked == 1
    assert report.reason == "case budget of 1 reached"
    assert not report.passed


def test_resolve_theorems():
    assert resolve_theorems("all") == theorem_ids()
    assert resolve_theorems("T-1I-projectors, T-invertible-lemma") == ["T-1I-projectors", "T-invertible-lemma"]
    with pytest.raises(StructuralError):
        resolve_theorems("T-bogus")
    with pytest.raises(StructuralError):
        resolve_theorems(" , ")


def test_verify_many_keeps_input_order(z6):
    ids = ["T-invertible-lemma", "T-involution-laws", "T-1I-projectors"]
    reports = verify_many(ids, z6, threads=3)
    assert [r.theorem for r in reports] == ids
    assert [r.status for r in reports] == ["pass", "skipped", "pass"]


def test_status_store_records_runs(z6):
    verify("T-invertible-lemma", z6)
    verify("T-invertible-lemma", z6)
    rec = verify_status.snapshot()["T-invertible-lemma@Z6"]
    assert rec["status"] == "pass"
    assert rec["cases"] == 6 and rec["runs"] == 2
    assert rec["last_run_ts"].endswith("Z")


def test_brute_force_matches_the_equation_solver(z6):
    two = z6.element(2)
    assert brute_force_set(two, EQ1) == [z6.element(2), z6.element(5)]
    assert brute_force_set(two, lambda x: x * x == x) == [z6.zero, z6.one, z6.element(3), z6.element(4)]


def test_matrix_statements_are_skipped_on_residue_rings(m2f2):
    report = verify("T-matrix-inner-inverse", ring_for("zn:8"))
    assert report.status == "skipped" and report.passed
    assert report.reason == "T-matrix-inner-inverse is stated for matrix rings; Z8 is not one"
    assert get_theorem("T-matrix-inner-inverse").matrix_only
    assert verify("T-matrix-inner-inverse", m2f2).status == "pass"


@pytest.mark.parametrize("spec", ["zn:6", "zn:8"])
def test_mitsch_lower_set_lies_below_upper_set(spec):
    report = verify("T-mitsch-lemma", ring_for(spec))
    assert report.status == "pass"
    assert report.cases_checked > 0
