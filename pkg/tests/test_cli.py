import csv
import io
import json
import subprocess
import sys

import pytest

from weightone.cli import main


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr()


def test_classgroup_json(capsys):
    code, out = run(["classgroup", "--q", "23", "--json"], capsys)
    doc = json.loads(out.out)
    assert code == 0
    assert doc["forms"] == [[1, 1, 6], [2, -1, 3], [2, 1, 3]]
    assert doc["invariant_factors"] == [3] and doc["torsion"] == {"2": 0, "3": 2}
    assert doc["characters"] == [[0], [1], [2]]


def test_classgroup_csv(capsys):
    code, out = run(["classgroup", "--q", "47", "--csv"], capsys)
    rows = list(csv.DictReader(io.StringIO(out.out)))
    assert code == 0 and len(rows) == 5 and rows[0]["order"] == "1"


def test_theta_csv(capsys):
    code, out = run(["theta", "--q", "23", "--chi", "1", "--limit", "30", "--csv"], capsys)
    rows = list(csv.reader(io.StringIO(out.out)))
    assert rows[0] == ["n", "a_exact", "a_float"]
    assert rows[2] == ["2", "-1", "-1"]
    assert len(rows) == 31


def test_theta_json_float_format(capsys):
    code, out = run(["theta", "--q", "47", "--limit", "3"], capsys)
    doc = json.loads(out.out)
    assert doc["coefficients"][1]["float"] == float(f"{(5 ** 0.5 - 1) / 2:.12g}")
    assert doc["zeta_order"] == 5


@pytest.mark.parametrize("argv", [["classgroup", "--q", "13"], ["classgroup", "--q", "21"],
                                  ["theta", "--q", "23", "--chi", "0"], ["theta", "--q", "23", "--chi", "9"],
                                  ["rankin", "--q", "7"], ["bound", "--q", "23", "--k-prop1", "-1"]])
def test_invalid_input_exit_code(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_verify_exit_codes(capsys):
    code, out = run(["verify", "--suite", "identities"], capsys)
    assert code == 0 and "[PASS]" in out.out and "[FAIL]" not in out.out
    code, out = run(["verify", "--suite", "scheme", "--json"], capsys)
    assert code == 0 and all(c["passed"] for c in json.loads(out.out)["scheme"])


def test_verify_failure_is_exit_one(monkeypatch, capsys):
    from weightone import cli
    from weightone.verify import Check

    monkeypatch.setattr(cli, "run_suite", lambda name, grid: [Check("forced", False)])
    code, out = run(["verify", "--suite", "duality"], capsys)
    assert code == 1 and "[FAIL] forced" in out.out


def test_bound_and_fields(capsys):
    code, out = run(["bound", "--q", "23", "--json"], capsys)
    doc = json.loads(out.out)
    assert doc["dihedral_dim"] == 1 and doc["total"] >= 1
    code, out = run(["bound", "--q", "23", "--k-prop1", "1", "--k-prop2a", "1", "--json"], capsys)
    assert json.loads(out.out)["constants"] == {"k_prop1": 1.0, "k_prop2a": 1.0}
    code, out = run(["fields", "--q", "23", "--json"], capsys)
    doc = json.loads(out.out)
    assert (doc["h2"], doc["h3"], doc["cubic_count_standard"], doc["genus"]) == (0, 2, 1, 0)
    code, out = run(["fields", "--q", "23"], capsys)
    assert "genus: 0" in out.out


def test_rankin(capsys):
    code, out = run(["rankin", "--q", "23", "--x", "2000"], capsys)
    doc = json.loads(out.out)
    assert code == 0 and doc["value"] > 0 and doc["stable"]
    code, out = run(["rankin", "--q", "23", "--x", "30", "--csv"], capsys)
    rows = list(csv.reader(io.StringIO(out.out)))
    assert rows[0] == ["n", "b"] and rows[1] == ["1", "1"] and rows[23] == ["23", "2"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "weightone", "fields", "--q", "7", "--json"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["h"] == 1
