import json

import pytest

from spinmoduli.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from spinmoduli.euler import bundled_ledger
from spinmoduli.verify import SUITES, run_verify


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_all_json(capsys):
    code, out, _ = run(capsys, "--json", "verify", "all")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert set(doc) == {"command", "inputs", "results", "checks", "pass"}
    assert doc["pass"] is True
    for check in doc["checks"]:
        assert set(check) == {"name", "anchor", "expected", "got", "pass"}
        assert check["anchor"]


def test_verify_arf_and_euler_contents():
    arf = run_verify("arf")
    assert arf.passed
    assert [3, 1] in [c["got"] for c in arf.checks] and [10, 6] in [c["got"] for c in arf.checks]
    euler = run_verify("euler")
    got = {c["got"] for c in euler.checks if c["name"].startswith("ledger")}
    assert got == {"1/1", "-2/1", "6/1", "18/1"}


def test_reports_are_deterministic():
    a = [c for s in SUITES for c in run_verify(s).checks]
    b = run_verify("all").checks
    assert a == b


def test_unknown_suite_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "nope")
    assert code == EXIT_USAGE != EXIT_FAIL
    assert "unknown suite" in err


@pytest.mark.parametrize("argv", [
    ("strata", "3", "0"),
    ("strata", "0", "2"),
    ("boundary", "1", "2", "1"),
    ("boundary", "1", "1", "1"),
    ("arf", "7"),
    ("euler", "no-such-ledger"),
    ("betti", "/nonexistent.json"),
    ("frobnicate",),
    (),
])
def test_input_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_quiet(capsys):
    code, out, err = run(capsys, "--quiet", "verify", "relations")
    assert code == EXIT_OK and out == "" and err == ""


def test_strata_and_boundary(capsys):
    code, out, _ = run(capsys, "--json", "strata", "0", "5")
    assert code == EXIT_OK and json.loads(out)["results"]["count"] == 26
    code, out, _ = run(capsys, "--json", "boundary", "1", "3", "1", "1", "0")
    doc = json.loads(out)
    assert [t["label"] for t in doc["results"]["types"]][-2:] == ["A_{1,{3}}", "B_{1,{3}}"]
    code, out, _ = run(capsys, "boundary", "1", "2", "1", "1")
    assert "A_{1,{}}" in out and "even root" in out


def test_pic_rank(capsys):
    code, out, _ = run(capsys, "--json", "pic-rank", "1", "3", "1", "1", "0")
    doc = json.loads(out)
    assert doc["results"]["generators"] == 12 and doc["results"]["caveat"]


def test_plan(capsys):
    code, out, _ = run(capsys, "--json", "plan", "1", "2", "5")
    doc = json.loads(out)
    assert doc["results"]["base_cases"] == [[0, 3], [0, 4], [1, 1]]
    assert [(f["g"], f["n"]) for f in doc["results"]["flags"]] == [(0, 4)]
    code, out, _ = run(capsys, "--json", "plan", "9", "1", "4", "--prune-trivial")
    assert json.loads(out)["results"]["base_cases"] == []


def test_euler_file_and_failure(capsys, tmp_path):
    ledger = bundled_ledger("chi_S12bar")
    path = tmp_path / "s12bar.json"
    path.write_text(ledger.to_text())
    code, out, _ = run(capsys, "--json", "euler", str(path))
    assert code == EXIT_OK
    assert json.loads(out)["results"]["chi_S12bar"] == "6/1"
    ledger.expected = ledger.expected + 1
    path.write_text(ledger.to_text())
    assert run(capsys, "euler", str(path))[0] == EXIT_FAIL


def test_betti_file(capsys, tmp_path):
    path = tmp_path / "s13.json"
    path.write_text(json.dumps({"d": 3, "chi": "18", "fixed": {"0": 1, "1": 0},
                                "upper": {"2": 8}, "expect": [1, 0, 8, 0, 8, 0, 1]}))
    code, out, _ = run(capsys, "--json", "betti", str(path))
    assert code == EXIT_OK and json.loads(out)["results"]["betti"] == [1, 0, 8, 0, 8, 0, 1]
    path.write_text(json.dumps({"d": 3, "chi": "18", "fixed": {"1": 0}, "lower": {"0": 1},
                                "upper": {"2": 8}, "expect": [1, 0, 8, 0, 8, 0, 1]}))
    assert run(capsys, "betti", str(path))[0] == EXIT_FAIL
    path.write_text("{not json")
    assert run(capsys, "betti", str(path))[0] == EXIT_USAGE
