import json
import subprocess
import sys

import pytest

from caminakit import analysis as an
from caminakit.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_d8_text(capsys):
    code, out, _ = run(["analyze", "--group", "dihedral:8"], capsys)
    assert code == 0
    assert "Camina triples: 4" in out
    assert "status: ok" in out


def test_analyze_d8_json(capsys):
    code, out, _ = run(["analyze", "--group", "dihedral:8", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "ok"
    assert len(doc["triples"]) == 4
    assert sorted(t["N"]["order"] for t in doc["triples"]) == [2, 4, 4, 4]
    assert all(t["M"]["members"] == [0, 2] for t in doc["triples"])
    assert set(doc["suites"].values()) == {"pass"}
    assert an.dumps(json.loads(out)) == out


def test_analyze_cyclic(capsys):
    code, out, _ = run(["analyze", "--group", "cyclic:12", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["triples"] == [] and doc["vanishing_off_global"] is None


def test_analyze_malformed_file(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("3\n0 1 2\n1 2\n")
    code, out, _ = run(["analyze", "--input", str(p)], capsys)
    assert code == 1
    assert "MalformedInput" in out


def test_analyze_file_input(tmp_path, capsys):
    p = tmp_path / "s3.txt"
    p.write_text("degree 3\n1 2 0\n1 0 2\n")
    code, out, _ = run(["analyze", "--input", str(p), "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and [t["N"]["order"] for t in doc["triples"]] == [3]


def test_analyze_checks_subset(capsys):
    code, out, _ = run(["analyze", "--group", "symmetric:3", "--format", "json",
                        "--checks", "conditions,theorem1"], capsys)
    doc = json.loads(out)
    assert doc["suites"]["theorem1"] == "pass"
    assert doc["suites"]["lemmas"] == "skipped"
    assert "theorem2" not in doc["triples"][0]


def test_bad_checks_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "--group", "symmetric:3", "--checks", "nonsense"])
    assert exc.value.code == 2  # argparse usage error


def test_order_cap_is_input_error(capsys):
    code, out, _ = run(["analyze", "--group", "symmetric:5", "--max-order", "100"], capsys)
    assert code == 1 and "InvalidSpec" in out


def test_chartab(capsys):
    code, out, _ = run(["chartab", "--group", "quaternion:8", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert sorted(ch["degree"] for ch in doc["characters"]) == [1, 1, 1, 1, 2]
    code, out, _ = run(["chartab", "--group", "alternating:5"], capsys)
    assert code == 0 and "zeta_5" in out


def test_chartab_bad_spec(capsys):
    code, _, err = run(["chartab", "--group", "dihedral:7"], capsys)
    assert code == 1 and "error" in err


def test_census_error_isolation(capsys):
    code, out, _ = run(["census", "--group", "symmetric:3", "--group", "frobenius:9:4:3",
                        "--group", "bogus:1", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["errored"] == ["bogus:1", "frobenius:9:4:3"]
    assert [g["name"] for g in doc["groups"]] == ["bogus:1", "frobenius:9:4:3", "symmetric:3"]
    assert doc["groups"][2]["triple_count"] == 1


def test_empty_catalog(tmp_path, capsys):
    p = tmp_path / "cat.txt"
    p.write_text("# nothing here\n\n")
    code, out, _ = run(["census", "--catalog", str(p), "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["catalog_size"] == 0 and doc["groups"] == []


def test_census_jobs_independent(tmp_path):
    specs = ["dihedral:8", "symmetric:3", "quaternion:8", "alternating:4", "cyclic:6"]
    a = an.dumps(an.run_census(specs, jobs=1))
    b = an.dumps(an.run_census(list(reversed(specs)), jobs=2))
    assert a == b


def test_verify_and_out_file(tmp_path, capsys):
    out = tmp_path / "v.txt"
    code, _, _ = run(["verify", "--group", "dihedral:8", "--group", "frobenius:5:2:4",
                      "--out", str(out)], capsys)
    text = out.read_text()
    assert code == 0
    assert "PASS dihedral:8" in text and "PASS frobenius:5:2:4" in text


def test_verify_reports_errors(capsys):
    code, out, _ = run(["verify", "--group", "frobenius:9:4:3"], capsys)
    assert code == 1 and "ERROR frobenius:9:4:3" in out


def test_violation_exit_code(monkeypatch, capsys):
    from caminakit import camina as cm
    from caminakit.errors import TheoremViolation

    def broken(*args, **kwargs):
        raise TheoremViolation("injected")

    monkeypatch.setattr(cm, "verify_theorem1", broken)
    code, out, _ = run(["analyze", "--group", "dihedral:8", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 2
    assert doc["suites"]["theorem1"] == "fail" and doc["status"] == "violation"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "caminakit", "analyze", "--group", "symmetric:3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "Camina triples: 1" in res.stdout


def test_analyze_config_validation():
    with pytest.raises(ValueError):
        an.AnalyzeConfig("dihedral:8", checks=("nope",))
    cfg = an.AnalyzeConfig("dihedral:8")
    assert cfg.checks == an.ALL_CHECKS and cfg.max_order == 512
