import dataclasses
import json
import shutil
import subprocess
import sys

import pytest

from extdim import fixtures as fx
from extdim.cli import main
from extdim.verify import OPS, run_manifest


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_ex1_A(capsys):
    code, out, _ = run(capsys, "--json", "info", "ex1_A")
    data = json.loads(out)
    assert code == 0
    assert data["dim"] == 9 and data["loewy_length"] == 2
    assert data["components"] == ["Euclidean ~D4"]


def test_info_ex3_A_loewy(capsys):
    code, out, _ = run(capsys, "info", "ex3_A", "--json")
    assert code == 0 and json.loads(out)["loewy_length"] == 5


def test_info_empty_file(capsys, tmp_path):
    p = tmp_path / "empty.alg"
    p.write_text("")
    code, _, err = run(capsys, "info", str(p))
    assert code == 2
    assert "line 1, col 1" in err


def test_info_reports_position_of_bad_vertex(capsys, tmp_path):
    p = tmp_path / "bad.alg"
    p.write_text("field Q\nvertex 1\narrow a : 1 -> 7\n")
    code, _, err = run(capsys, "info", str(p))
    assert code == 2 and "line 3" in err and "undeclared vertex" in err


def test_unknown_input(capsys):
    code, _, err = run(capsys, "info", "no_such_algebra")
    assert code == 2 and "no algebra" in err


def test_ar_complete(capsys):
    code, out, _ = run(capsys, "--json", "ar", "ex2_A")
    data = json.loads(out)
    assert code == 0 and data["status"] == "complete" and len(data["nodes"]) == 6


def test_ar_dot(capsys):
    code, out, _ = run(capsys, "ar", "ex2_A", "--dot")
    assert code == 0 and out.startswith("digraph")


def test_ar_budget_exhausted(capsys):
    code, out, _ = run(capsys, "ar", "ex1_B", "--budget-dim", "40")
    assert code == 3 and "budget-exhausted" in out


def test_dims(capsys):
    code, out, _ = run(capsys, "--json", "dims", "ex3_A")
    data = json.loads(out)
    s1 = next(r for r in data["simples"] if r["vertex"] == "1")
    assert code == 0 and s1["pd"]["kind"] == "infinite"
    assert data["global_dim"]["kind"] == "infinite"


def test_silting(capsys):
    code, out, _ = run(capsys, "--json", "silting", "ex1_P")
    data = json.loads(out)
    assert code == 0 and data["tilting"] and data["length"] == 2
    assert data["end"]["graph"] == ["Euclidean ~D4"] and data["end"]["dim"] == 12


def test_torsion(capsys):
    code, out, _ = run(capsys, "--json", "torsion", "ex2_P")
    data = json.loads(out)
    assert code == 0
    assert data["A"]["split"] and data["B"]["split"]
    assert data["A"]["T"] == [[1, 0, 0]]


def test_ed(capsys):
    code, out, _ = run(capsys, "ed", "ex3_A", "-v")
    assert code == 0 and "[0, 4]" in out and "representation-finite" in out


def test_ed_generated_families(capsys):
    code, out, _ = run(capsys, "--json", "ed", "beilinson:2")
    assert code == 0 and json.loads(out)["interval"] == [0, 2]
    code, out, _ = run(capsys, "--json", "ed", "micro:k_x_x2")
    assert code == 0 and json.loads(out)["interval"] == [0, 0]


def test_field_override(capsys):
    code, out, _ = run(capsys, "--field", "F 7", "--json", "info", "ex2_A")
    assert code == 0 and "7" in json.loads(out)["field"]


@pytest.mark.parametrize("fid", ["ex1", "ex2", "ex3"])
def test_verify_fixture(capsys, fid):
    code, out, _ = run(capsys, "--strict", "--json", "verify", fid)
    data = json.loads(out)
    assert code == 0 and data["failed"] == 0 and data["passed"] > 0


def test_verify_all_deterministic(capsys):
    _, first, _ = run(capsys, "--json", "verify", "all")
    _, second, _ = run(capsys, "--json", "verify", "all")
    strip = lambda s: [{k: v for k, v in r.items() if k != "seconds"} for r in json.loads(s)["results"]]
    assert strip(first) == strip(second)
    assert json.loads(first)["failed"] == 0


def test_strict_exit_on_failed_claim(capsys, monkeypatch):
    real = fx.load_manifest

    def broken(fid):
        m = real(fid)
        claims = [dataclasses.replace(c, expected=[9, 9]) if c.id == "ed-A" else c for c in m.claims]
        return dataclasses.replace(m, claims=claims)

    monkeypatch.setattr(fx, "load_manifest", broken)
    code, out, _ = run(capsys, "--strict", "verify", "ex1")
    assert code == 1 and "FAIL" in out
    code, _, _ = run(capsys, "verify", "ex1")
    assert code == 0


def test_console_script_installed():
    exe = shutil.which("extdim")
    cmd = [exe] if exe else [sys.executable, "-m", "extdim.cli"]
    out = subprocess.run(cmd + ["--help"], capture_output=True, text=True)
    assert out.returncode == 0 and "verify" in out.stdout


# -- manifests ---------------------------------------------------------------------------------------
@pytest.mark.parametrize("fid", fx.manifest_ids())
def test_manifest_integrity(fid):
    m = fx.load_manifest(fid)
    assert m.check_hashes() == []
    ids = [c.id for c in m.claims]
    assert len(ids) == len(set(ids))
    for c in m.claims:
        assert c.quote and c.op in OPS


def test_tampered_hash_rejected(monkeypatch):
    real = fx.load_manifest
    monkeypatch.setattr(fx, "load_manifest",
                        lambda fid: dataclasses.replace(real(fid), hashes={"ex2_A.alg": "0" * 64}))
    with pytest.raises(ValueError, match="hash mismatch"):
        run_manifest("ex2")
