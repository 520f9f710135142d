import json

import pytest

from integral_identities import harness
from integral_identities.harness import EXIT_FAILED, EXIT_IO, EXIT_OK, EXIT_SELECTION, main, run


def test_elliptic_selection():
    report, status = run("E-*", 1)
    assert status == EXIT_OK
    assert [r.id for r in report.records] == ["E-R5a", "E-R5b", "E-cn2", "E-cn4", "E-cn5"]


def test_r_family_passes():
    report, status = run("R*", 5)
    assert status == EXIT_OK
    assert report.records
    assert all(r.id.startswith("R") for r in report.records)


def test_unknown_selection():
    with pytest.raises(harness.SelectionError):
        run("NOPE", 5)
    assert main(["--select", "NOPE"]) == EXIT_SELECTION


def test_comma_separated_globs():
    ids = [s.id for s in harness.select("R2, E-cn*")]
    assert ids == ["R2", "E-cn2", "E-cn4", "E-cn5"]


def test_failure_exit_status(capsys):
    assert main(["--select", "R2", "--tol", "1e-17"]) == EXIT_FAILED
    doc = json.loads(capsys.readouterr().out)
    assert doc["summary"]["failed"] > 0


def test_exit_status_tracks_failed_count():
    for tol in (None, 1e-17):
        report, status = run("R4-gen", 2, tol)
        assert (status == EXIT_OK) == (report.summary["failed"] == 0)


def test_summary_matches_records():
    report, _ = run("A*", 3)
    s = report.summary
    assert s["total"] == len(report.records)
    assert s["passed"] + s["failed"] == s["total"]
    assert set(s["max_rel_diff"]) == {r.id for r in report.records}


def test_records_are_reproducible():
    a, _ = run("R6*,A1", 3, seed=5)
    b, _ = run("R6*,A1", 3, seed=5)
    dump = lambda rep: json.dumps(rep.records_json(), indent=2)
    assert dump(a) == dump(b)


def test_report_json_shape():
    report, _ = run("R2", 2)
    doc = json.loads(report.to_json())
    assert {"timestamp", "seed", "tolerance_classes"} <= set(doc["metadata"])
    rec = doc["records"][0]
    for key in ("id", "params", "lhs", "rhs", "abs_diff", "rel_diff", "tol", "pass", "note"):
        assert key in rec


def test_out_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["--select", "E-*", "--out", str(out)]) == EXIT_OK
    doc = json.loads(out.read_text())
    assert doc["summary"]["total"] == 5
    assert "5/5 records passed" in capsys.readouterr().out


def test_unwritable_output(tmp_path):
    bad = tmp_path / "missing" / "report.json"
    assert main(["--select", "R2", "--out", str(bad)]) == EXIT_IO


def test_list(capsys):
    assert main(["--list"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "R4-gen" in out and "E-cn5" in out


def test_bad_samples():
    assert main(["--samples", "0"]) == EXIT_SELECTION
