import io
import json

import pytest

from engine.cli.main import main
from engine.config import load_settings, set_settings

E12 = '[["0","1"],["0","0"]]'
COLSPACE_E2 = '{"S": {"colspace": [["0","1"]]}, "T": {"colspace": [["0","1"]]}}'


@pytest.fixture(autouse=True)
def _fresh_settings():
    set_settings(load_settings())
    yield
    set_settings(load_settings())


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_compute_moore_penrose(capsys):
    code, out = _run(capsys, "compute", "--ring", "m2q", "--element", '[["2","-2"],["0","0"]]', "--inverse", "moore-penrose")
    assert code == 0
    assert out["status"] == "unique"
    assert out["result"] == [["1/4", "0"], ["-1/4", "0"]]
    assert "elapsed" not in out


def test_compute_drazin_and_missing_group_inverse(capsys):
    code, out = _run(capsys, "compute", "--ring", "m2q", "--element", E12, "--inverse", "drazin")
    assert code == 0
    assert out["result"] == [["0", "0"], ["0", "0"]] and out["index"] == 2
    code, out = _run(capsys, "compute", "--ring", "m2q", "--element", E12, "--inverse", "group")
    assert code == 1
    assert out["status"] == "none" and out["reason"] == "index 2 > 1"


def test_compute_weighted_with_identity_weight(capsys):
    one = '[["1","0"],["0","1"]]'
    code, out = _run(
        capsys, "compute", "--ring", "m2q", "--element", '[["2","-2"],["0","0"]]', "--inverse", "ef-mp", "--weight", one
    )
    assert code == 0
    assert out["result"] == [["1/4", "0"], ["-1/4", "0"]]


def test_compute_needs_its_extra_operands(capsys):
    code, _ = _run(capsys, "compute", "--ring", "m2f5", "--element", E12, "--inverse", "bc")
    assert code == 64
    code, _ = _run(capsys, "compute", "--ring", "m2f5", "--element", E12, "--inverse", "w-core")
    assert code == 64


def test_star_inverse_on_a_ring_without_involution(capsys):
    code, out = _run(capsys, "compute", "--ring", "zn:6", "--element", "2", "--inverse", "moore-penrose")
    assert code == 65 and out is None


def test_enumerate_inner_inverses_in_z6(capsys):
    code, out = _run(capsys, "enumerate", "--ring", "zn:6", "--element", "2", "--equations", "1")
    assert code == 0
    assert out == {"equations": "1", "count": 2, "members": ["2", "5"]}


def test_enumerate_count_only(capsys):
    code, out = _run(capsys, "enumerate", "--ring", "m2f5", "--element", E12, "--equations", "1,2", "--count-only")
    assert code == 0
    assert out == {"equations": "1,2", "count": 25}


def test_enumerate_errors(capsys):
    code, _ = _run(capsys, "enumerate", "--ring", "zn:6", "--element", "2", "--equations", "1,2,3,4")
    assert code == 65
    code, _ = _run(capsys, "enumerate", "--ring", "m2q", "--element", E12, "--equations", "1")
    assert code == 66
    code, _ = _run(capsys, "enumerate", "--ring", "zn:6", "--element", "2", "--equations", "1,12")
    assert code == 64


@pytest.mark.parametrize("mode", ["outer", "reflexive"])
def test_prescribe_outer_and_reflexive(capsys, mode):
    code, out = _run(
        capsys, "prescribe", "--ring", "m2f5", "--element", E12, "--constraints", COLSPACE_E2, "--mode", mode
    )
    assert code == 0
    assert out["result"] == [["0", "0"], ["1", "0"]]


def test_prescribe_rejects_malformed_constraints(capsys):
    for constraints in ('{"X": {"colspace": [["0","1"]]}}', "{}", '{"S": {"rowspace": [["0","1"]]}}', "{oops"):
        code, _ = _run(capsys, "prescribe", "--ring", "m2f5", "--element", E12, "--constraints", constraints)
        assert code == 64, constraints


def test_verify_and_catalog(capsys):
    code, _ = _run(capsys, "verify", "--ring", "zn:6", "--theorems", "T-bogus")
    assert code == 64
    code, out = _run(capsys, "verify", "--ring", "m2f2", "--theorems", "T-1I-projectors,T-12I-projectors")
    assert code == 0
    assert [r["status"] for r in out] == ["pass", "pass"]
    assert all("elapsed" not in r for r in out)
    code, out = _run(capsys, "verify", "--ring", "m2f2", "--theorems", "T-1I-projectors", "--max-cases", "3")
    assert code == 3 and out[0]["status"] == "incomplete"
    code, out = _run(capsys, "catalog")
    assert code == 0
    assert any(entry["id"] == "T-1I-projectors" for entry in out)


def test_usage_errors(capsys):
    assert _run(capsys)[0] == 64
    assert _run(capsys, "compute", "--ring", "m2q", "--element", E12, "--inverse", "nope")[0] == 64
    assert _run(capsys, "compute", "--ring", "zn:1", "--element", "0", "--inverse", "inner")[0] == 64


def test_job_from_stdin(capsys, monkeypatch):
    job = {"command": "compute", "ring": "zn:6", "element": "5", "options": {"inverse": "inverse"}}
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(job)))
    code, out = _run(capsys, "--job", "-")
    assert code == 0
    assert out["result"] == "5"
    monkeypatch.setattr("sys.stdin", io.StringIO('{"command": "compute", "bogus": 1}'))
    assert _run(capsys, "--job", "-")[0] == 64


@pytest.mark.parametrize("spec", ["zn:6", "zn:8"])
def test_verify_whole_catalog_on_residue_rings(capsys, spec):
    code, out = _run(capsys, "verify", "--ring", spec, "--theorems", "all")
    assert code == 0
    assert {r["status"] for r in out} <= {"pass", "skipped"}
    matrix_only = next(r for r in out if r["theorem"] == "T-matrix-inner-inverse")
    assert matrix_only["status"] == "skipped"


@pytest.mark.slow
def test_verify_whole_catalog_on_m2f2(capsys):
    code, out = _run(capsys, "verify", "--ring", "m2f2", "--theorems", "all", "--max-cases", "10000000", "--max-seconds", "3600")
    assert code == 0
    assert all(r["status"] == "pass" for r in out if r["theorem"] == "T-matrix-inner-inverse")


def test_zero_denominator_is_a_usage_error(capsys):
    code, out = _run(capsys, "compute", "--ring", "m2q", "--element", '[["1/0","0"],["0","0"]]', "--inverse", "inner")
    assert code == 64 and out is None
