import json
import subprocess
import sys


from nilex import catalog_get, parse_form, serialize_algebra, serialize_cocycle
from nilex.cli import BAD_INPUT, FAILED, OK, main
from nilex.verify import validate_report


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_pass(capsys):
    code, out, _ = run(capsys, "check", "A5_06", "--format", "json")
    data = json.loads(out)
    assert code == OK
    assert data["powers"] == [5, 4, 3, 2, 1, 0] and data["ann_dim"] == 1


def test_check_fails_on_printed_erratum(capsys):
    code, out, _ = run(capsys, "check", "A6_13_printed")
    assert code == FAILED


def test_check_from_file(tmp_path, capsys):
    path = tmp_path / "a.alg"
    path.write_text(serialize_algebra(catalog_get("A4_06")))
    code, out, _ = run(capsys, "check", str(path), "--format", "json")
    assert code == OK and json.loads(out)["algebra"] == "A4_06"


def test_parse_error_exit(tmp_path, capsys):
    path = tmp_path / "bad.alg"
    path.write_text("algebra X dim 2\ne1*e1 = sqrt2 e2\n")
    code, _, err = run(capsys, "check", str(path))
    assert code == BAD_INPUT and "line 2, column 9" in err


def test_unknown_name_and_off_locus(capsys):
    assert run(capsys, "check", "A9_99")[0] == BAD_INPUT
    assert run(capsys, "check", "A6_08", "--param", "beta=3")[0] == BAD_INPUT


def test_cohomology_json(capsys):
    code, out, _ = run(capsys, "cohomology", "A4_01", "--format", "json")
    assert code == OK and json.loads(out)["dims"] == {"Z2": 6, "B2": 3, "H2": 3}


def test_cohomology_param_binding(capsys):
    code, out, _ = run(capsys, "cohomology", "A4_04", "--param", "alpha=0", "--format", "json")
    assert code == OK and json.loads(out)["algebra"] == "A4_04(0)"


def test_extend(tmp_path, capsys):
    path = tmp_path / "nabla.coc"
    path.write_text(serialize_cocycle(parse_form("D1,4 + D2,3 + D3,2 + D4,1", 4), "nabla2"))
    code, out, _ = run(capsys, "extend", "A4_04", "--param", "alpha=1", str(path), "--name", "E")
    assert code == OK
    assert "e4*e1 = e5" in out
    bad = tmp_path / "bad.coc"
    bad.write_text(serialize_cocycle(parse_form("D1,3", 4)))
    assert run(capsys, "extend", "A4_01", str(bad))[0] == FAILED


def test_iso_witness_with_excluded_values(capsys):
    code, out, err = run(
        capsys, "iso", "A6_08", "--param", "beta=3/2", "A6_09", "--param", "beta=3/2", "--format", "json"
    )
    assert code == OK and json.loads(out)["isomorphic"] is True
    assert "excluded" in err


def test_iso_certificate(capsys):
    code, out, _ = run(capsys, "iso", "A5_06", "A5_07", "--format", "json")
    data = json.loads(out)
    assert code == FAILED and data["certificate"]["kind"] == "fingerprint"


def test_bad_prime_rejected(capsys):
    assert run(capsys, "iso", "A5_06", "A5_07", "--primes", "3,5")[0] == BAD_INPUT


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog", "--dim", "5")
    assert code == OK and "A5_07" in out and "A6_01" not in out


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("NILEX_SEED", "77")
    code, out, _ = run(capsys, "check", "A4_01", "--format", "json")
    assert json.loads(out)["seed"] == 77
    code, out, _ = run(capsys, "check", "A4_01", "--format", "json", "--seed", "5")
    assert json.loads(out)["seed"] == 5


def test_output_is_deterministic(capsys):
    first = run(capsys, "iso", "A5_05", "--param", "alpha=0", "--param", "beta=0", "A5_02", "--param", "alpha=2")
    second = run(capsys, "iso", "A5_05", "--param", "alpha=0", "--param", "beta=0", "A5_02", "--param", "alpha=2")
    assert first == second and first[0] == OK


def test_verify_paper_subprocess():
    cmd = [sys.executable, "-m", "nilex.cli", "verify-paper", "--format", "json", "--jobs", "2"]
    proc = subprocess.run(cmd, capture_output=True, text=True, timeout=600)
    assert proc.returncode == OK, proc.stderr
    report = json.loads(proc.stdout)
    validate_report(report)
    assert report["summary"]["fail"] == 0
