from __future__ import annotations

import json
import subprocess
import sys

import pytest

from qcjordan.qc_cli import EXIT_BAD_WINDOW, EXIT_DEGENERATE, EXIT_FAIL, EXIT_NOT_MEMBER, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate_csv(capsys):
    code, out, _ = run(capsys, "generate", "--scheme", "fibonacci-palindromic", "--radius", "9")
    assert code == 0
    assert len(out.strip().splitlines()) == 10


def test_generate_json_and_obj_agree(capsys, tmp_path):
    js = tmp_path / "p.json"
    code, _, _ = run(capsys, "generate", "--scheme", "penrose", "--radius", "3", "--format", "json", "-o", str(js))
    assert code == 0
    count = json.loads(js.read_text())["count"]
    code, out, _ = run(capsys, "export", str(js), "--format", "obj")
    assert code == 0
    assert sum(1 for line in out.splitlines() if line.startswith("v ")) == count == 26


def test_generate_exact_radius(capsys):
    code, out, _ = run(capsys, "generate", "--radius", "2+4*tau", "--format", "json")
    assert code == 0
    assert json.loads(out)["count"] == 9


def test_table_markdown(capsys):
    code, out, _ = run(capsys, "table", "--format", "md")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 11
    assert "L_-2" in lines[0] and "L_2" in lines[0]
    assert "| L_0 |" in lines[6]


def test_jordan_table_alias_json(capsys):
    code, out, _ = run(capsys, "jordan-table", "--rows", "0..1", "--cols", "0..0", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["cells"][0][0] == "L_0"


def test_table_non_member_exit_code(capsys):
    code, _, err = run(capsys, "table", "--scheme", "penrose", "--rows", "5,0,0,0", "--cols", "0,0,0,0")
    assert code == EXIT_NOT_MEMBER
    assert "not in the model set" in err


def test_bad_window_file(capsys, tmp_path):
    bad = tmp_path / "w.json"
    bad.write_text("{not json")
    code, _, _ = run(capsys, "generate", "--window", str(bad))
    assert code == EXIT_BAD_WINDOW


def test_window_dimension_mismatch(capsys):
    code, _, _ = run(capsys, "generate", "--scheme", "penrose", "--window", "0,1")
    assert code == EXIT_BAD_WINDOW


def test_degenerate_window(capsys, tmp_path):
    flat = tmp_path / "flat.json"
    flat.write_text(json.dumps({"vertices": [["0", "0"], ["1", "1"], ["2", "2"]]}))
    code, _, _ = run(capsys, "generate", "--scheme", "penrose", "--window", str(flat))
    assert code == EXIT_DEGENERATE
    code, _, _ = run(capsys, "generate", "--window", "1,1")
    assert code == EXIT_DEGENERATE


def test_export_rejects_foreign_points(capsys, tmp_path):
    js = tmp_path / "p.json"
    run(capsys, "generate", "--radius", "9", "--format", "json", "-o", str(js))
    data = json.loads(js.read_text())
    data["points"][0]["coords"] = [5, 0]
    data["points"][0]["star"] = ["5"]
    js.write_text(json.dumps(data))
    code, _, _ = run(capsys, "export", str(js))
    assert code == EXIT_NOT_MEMBER


def test_verify_suite_report(capsys, monkeypatch):
    monkeypatch.setenv("QCJORDAN_THREADS", "3")
    code, out, _ = run(capsys, "verify", "icosian")
    assert code == 0
    report = json.loads(out)
    assert report["ok"]
    assert "3" in json.dumps(report)


def test_verify_quasiadd(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "quasiadd", "--scheme", "penrose")
    assert code == 0
    assert json.loads(out)["ok"]


def test_verify_unknown_suite(capsys):
    code, _, _ = run(capsys, "verify", "nope")
    assert code == EXIT_FAIL


def test_symmetry_palindromic_and_half_open(capsys):
    code, out, _ = run(capsys, "symmetry", "--scheme", "fibonacci-palindromic")
    assert code == 0
    code, out, _ = run(capsys, "symmetry", "--scheme", "fibonacci")
    assert code == EXIT_FAIL


def test_witt_check(capsys):
    code, out, _ = run(capsys, "witt-check", "--scheme", "fibonacci-unit", "--jacobi-trials", "50")
    assert code == 0
    code, out, _ = run(capsys, "witt-check", "--scheme", "fibonacci-palindromic", "--jacobi-trials", "10")
    assert code == EXIT_FAIL


def test_config_file(capsys, tmp_path):
    conf = tmp_path / "c.json"
    conf.write_text(json.dumps({"radius": "9", "format": "json"}))
    code, out, _ = run(capsys, "--config", str(conf), "generate")
    assert code == 0
    assert json.loads(out)["count"] == 9
    code, out, _ = run(capsys, "--config", str(conf), "generate", "--format", "csv")
    assert out.startswith("index,")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qcjordan", "generate", "--radius", "3"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.startswith("index,")


def test_missing_subcommand():
    with pytest.raises(SystemExit):
        main([])
