"""Command-line behaviour and exit codes."""

import json
import subprocess
import sys

import pytest

from symhecke import verify as vf
from symhecke.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dim(capsys):
    assert run(capsys, "dim", "--algebra", "A", "--n", "3") == (0, "34\n", "")
    assert run(capsys, "dim", "--algebra", "HB", "--n", "3")[1] == "48\n"
    assert run(capsys, "dim", "--algebra", "C", "--n", "3", "--N", "2")[1] == "20\n"
    assert run(capsys, "dim", "--algebra", "AK", "--n", "3", "--k", "1")[1] == "24\n"
    code, out, _ = run(capsys, "dim", "--algebra", "CK", "--n", "3", "--k", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["dim"] == data["expected"] == 14 and data["pattern_basis"]


def test_basis(capsys):
    code, out, _ = run(capsys, "basis", "--algebra", "A", "--n", "2")
    assert code == 0 and len(out.splitlines()) == 7
    assert "1,2\t1" in out.splitlines()


def test_compute(capsys):
    code, out, _ = run(capsys, "compute", "E(1, q, 1)", "--n", "1")
    assert (code, out) == (0, "(1)*1 + (-a2^-1)*g0\n")
    code, out, _ = run(capsys, "compute", "g0*g0 - (a1+a2)*g0 + a1*a2", "--n", "1")
    assert out == "0\n"
    code, out, _ = run(capsys, "compute", "E(2, -q^-1, 2)", "--algebra", "A", "--n", "2")
    assert out == "0\n"
    code, out, _ = run(capsys, "compute", "T*T", "--fused", "--k", "2", "--n", "1")
    assert code == 0 and "Psigma(2)" in out and "P(2)" in out
    code, out, _ = run(capsys, "compute", "g0", "--n", "1", "--format", "json")
    assert json.loads(out)["ambient"] == "B1"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "HB.quasi_idem", "--n", "2")
    assert (code, out) == (0, "HB.quasi_idem n=2: verified\n")
    code, out, _ = run(capsys, "verify", "AK.conj", "--k", "1")
    assert code == 0 and "divisibility-holds" in out
    code, out, _ = run(capsys, "verify", "FH.T", "--format", "json")
    assert code == 0 and json.loads(out)["status"] == "verified"
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and out.split() == list(vf.CLAIMS)


def test_verify_falsified_exits_1(capsys, monkeypatch):
    def bogus(ch, details, n):
        ch.add("always fails", False, "witness text")

    monkeypatch.setitem(vf.CLAIMS, "X.bogus", vf._Claim(bogus, {"n": 1}, [{"n": 1}]))
    code, out, _ = run(capsys, "verify", "X.bogus", "HB.quasi_idem", "--n", "1")
    assert code == 1
    assert "X.bogus n=1: falsified [always fails: witness text]" in out
    assert "HB.quasi_idem n=1: verified" in out


@pytest.mark.parametrize("argv", [
    ["verify", "NOPE"],
    ["verify", "HB.quasi_idem", "--n", "9"],
    ["dim", "--algebra", "A", "--n", "9"],
    ["dim", "--algebra", "C", "--n", "3", "--N", "1"],
    ["dim", "--algebra", "AK", "--n", "3"],
    ["compute", "g0 + * g1", "--n", "2"],
    ["compute", "g5", "--n", "2"],
    ["compute", "T", "--fused", "--n", "1"],
    ["fused", "build", "--k", "4", "--n", "4"],
    ["bratteli", "--family", "nope"],
    ["bratteli", "--family", "fused"],
    ["bogus-command"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2


def test_parse_error_message(capsys):
    code, _, err = run(capsys, "compute", "g0 + * g1", "--n", "2")
    assert code == 2 and "at position 5" in err


def test_bratteli(capsys):
    code, out, _ = run(capsys, "bratteli", "--family", "A", "--depth", "2", "--format", "dot")
    assert code == 0 and out.startswith("digraph") and '[label="1|1 (2)"]' in out
    code, out, _ = run(capsys, "bratteli", "--family", "seam", "--k", "3", "--depth", "4")
    assert out.splitlines()[-1] == "n=4: dim 69: 1, 4, 6, 4"
    code, out, _ = run(capsys, "bratteli", "--family", "C2", "--depth", "3", "--format", "json")
    assert json.loads(out)["family"] == "C2"


def test_structure_constants(capsys):
    code, out, _ = run(capsys, "structure-constants", "--algebra", "A", "--n", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data) == 49
    code, _, _ = run(capsys, "structure-constants", "--algebra", "A", "--n", "3", "--limit", "10")
    assert code == 2


def test_fused_commands(capsys):
    code, out, _ = run(capsys, "fused", "build", "--k", "2", "--n", "2")
    assert code == 0 and out.startswith("dim H_(2,2) = 7")
    code, out, _ = run(capsys, "fused", "verify-iso", "--k", "2", "--n", "2")
    assert code == 0 and "verified" in out
    code, out, _ = run(capsys, "fused", "element", "S0 - P(2)", "--k", "2", "--n", "1", "--format", "json")
    assert code == 0 and json.loads(out)["algebra"] == "H_(2,1)"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "symhecke", "dim", "--algebra", "C2pres", "--n", "4"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "70\n"
    res = subprocess.run([sys.executable, "-m", "symhecke", "dim", "--n", "99"], capture_output=True, text=True)
    assert res.returncode == 2
