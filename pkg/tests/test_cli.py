import json
import subprocess
import sys

import pytest

from cherednik.cli import main
from cherednik.irrep import IrrepModel, build_irrep


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_text_and_json(capsys):
    code, out, _ = run(capsys, "build", "4", "3")
    assert code == 0 and out.strip() == "dim 16, μ = 3"
    code, out, _ = run(capsys, "build", "--m", "5", "--n", "3", "--format", "json")
    data = json.loads(out)
    assert data["dimension"] == 25 and data["mu"] == 4 and "schema_version" in data


def test_build_writes_model(tmp_path, capsys):
    path = tmp_path / "l43.json"
    assert run(capsys, "build", "4", "3", "--out", str(path))[0] == 0
    assert IrrepModel.from_json(json.loads(path.read_text())).same_as(build_irrep((4, 3)))


def test_usage_errors(capsys):
    assert run(capsys, "build", "4", "2")[0] == 2
    assert run(capsys, "build", "4")[0] == 2
    assert run(capsys, "filtration", "3", "4", "--kinds", "ind")[0] == 2
    assert run(capsys, "filtration", "4", "3", "--kinds", "a,bogus")[0] == 2
    assert run(capsys, "coinv", "7", "3")[0] == 2
    assert run(capsys, "character", "4", "3", "--convention", "nope")[0] == 2
    assert run(capsys, "verify", "--suite", "nope")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_filtration_compare(capsys):
    code, out, _ = run(capsys, "filtration", "4", "3", "--kinds", "a,ind", "--compare")
    assert code == 0 and "F^a vs F^ind: EQUAL at all levels" in out


def test_filtration_csv(capsys):
    code, out, _ = run(capsys, "filtration", "4", "3", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "kind,level,weight,dimension"
    assert len(lines) > 1


def test_character_and_superpolynomial(capsys):
    code, out, _ = run(capsys, "character", "4", "3", "--convention", "kazhdan")
    assert code == 0 and out.strip().endswith("t^3 + q*t + q*t^2 + q^2*t + q^3")
    code, out, _ = run(capsys, "character", "3", "2", "--super")
    assert out.strip() == "superpolynomial from F^a (kazhdan): a^2*t + a^2*q + a^4"


def test_catalan(capsys):
    code, out, _ = run(capsys, "catalan", "4", "3", "--paths")
    assert code == 0
    assert out.splitlines()[0] == "count (4,3) = 5"
    assert len(out.splitlines()) == 2 + 5


def test_coinvariant(capsys):
    code, out, _ = run(capsys, "coinv", "5", "3")
    assert code == 0 and "Im A = Ker B: True" in out and "distributive: False" in out
    code, out, _ = run(capsys, "coinv", "--springer", "4")
    assert out.strip() == "Springer dimension n=4: 12"


def test_verify_suite_json(capsys, tmp_path):
    path = tmp_path / "catalan.json"
    code, _, _ = run(capsys, "verify", "--suite", "catalan", "--format", "json", "--out", str(path))
    data = json.loads(path.read_text())
    assert code == 0 and data["summary"]["FAIL"] == 0 and data["summary"]["PASS"] > 0


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cherednik.cli", "catalan", "5", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "count (5,3) = 7" in proc.stdout
