import json
import subprocess
import sys

import pytest

from lucas_atoms.cli import main
from lucas_atoms.lucas import lucas
from lucas_atoms.atoms import lucas_atom
from lucas_atoms.poly import from_serialized, parse


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_atom_text(capsys):
    assert run(capsys, "atom", "6") == (0, "s^2 + 3*t\n", "")


def test_quotient_rejection(capsys):
    code, out, _ = run(capsys, "quotient", "--num", "2", "--den", "4")
    assert code == 2 and "a_4 = 0 < b_4 = 1" in out
    code, out, _ = run(capsys, "quotient", "--num", "2", "--den", "4", "--format", "json")
    data = json.loads(out)
    assert code == 2 and data["reason"] == "a_4 = 0 < b_4 = 1" and data["witness"] == {"4": -1}


def test_catalan_eval(capsys):
    assert run(capsys, "catalan", "--group", "H4", "--k", "1", "--eval", "2,-1")[:2] == (0, "280\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["lucas", "9"],
        ["atom", "30"],
        ["cyclotomic", "15"],
        ["gamma", "q^2 - q + 1"],
        ["gamma", "--inverse", "s^2 + 3*t"],
        ["quotient", "--num", "4", "6", "--den", "2"],
        ["lucanomial", "6", "3"],
        ["lucanomial", "4", "2", "--m", "2"],
        ["catalan", "--group", "I2:7", "--k", "2"],
        ["rational-catalan", "3", "5"],
        ["narayana", "--group", "D5", "--k", "2", "--i", "3"],
        ["reduce", "--p", "2", "--n", "15"],
    ],
)
def test_json_round_trips_through_the_parser(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    data = json.loads(out)
    assert code == 0
    vars_ = ("q", "_") if argv[0] == "cyclotomic" or "--inverse" in argv else ("s", "t")
    poly = from_serialized(data["poly"], vars_)
    assert parse(data["text"], vars_) == poly


def test_json_schema_fields(capsys):
    data = json.loads(run(capsys, "atom", "12", "--format", "json")[1])
    assert data["n"] == 12 and data["phi"] == 4
    assert data["gamma"] == [1, -4, 1]
    assert from_serialized(data["poly"]) == lucas_atom(12)


def test_lucas_values(capsys):
    assert run(capsys, "lucas", "6")[1].strip() == str(lucas(6))
    assert run(capsys, "eval", "s^2 + 3*t", "2", "-1")[1] == "1\n"
    assert run(capsys, "eval", "q^2 + 1", "3")[1] == "10\n"


def test_two_square_and_rejection(capsys):
    code, out, _ = run(capsys, "two-square", "--n", "5")
    assert code == 0 and "G = s^2 - t" in out and "H = s" in out
    code, out, _ = run(capsys, "two-square", "--n", "7")
    assert code == 2 and "no analogue exists" in out
    code, out, _ = run(capsys, "two-square", "--n", "13", "--form", "gauss", "--format", "json")
    data = json.loads(out)
    assert data["identity_holds"] and data["kind"] == "GAUSS"


def test_exit_codes(capsys):
    assert run(capsys, "lucas", "0")[0] == 1
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 1
    with pytest.raises(SystemExit) as err:
        main(["atom", "x"])
    assert err.value.code == 1
    assert run(capsys, "gamma", "1 + 2*q")[0] == 1
    assert run(capsys, "eval", "s +", "1")[0] == 1
    assert run(capsys, "narayana", "--group", "E6", "--i", "2")[0] == 2
    assert run(capsys, "narayana", "--group", "H3", "--k", "2")[0] == 3
    assert run(capsys, "reduce", "--p", "2", "--n", "4")[0] == 1
    assert run(capsys, "catalan", "--group", "Z9")[0] == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "atoms-product", "--max-n", "200")
    assert code == 0 and out.strip() == "atoms-product: 200 instances, 0 failures"
    code, out, _ = run(capsys, "verify", "identities", "--suite", "TILE_SQ", "--max-m", "60")
    assert code == 0 and "0 failures" in out
    code, out, _ = run(capsys, "verify", "two-square", "--n", "5")
    assert code == 0 and "G = s^2 - t" in out
    code, out, _ = run(capsys, "verify", "valuations", "--max-n", "10", "--max-b", "3", "--format", "json")
    data = json.loads(out)
    assert code == 3 and not data["passed"]
    assert run(capsys, "verify", "atoms-product", "--n", "5")[0] == 1


def test_timing_goes_to_stderr(capsys):
    code, out, err = run(capsys, "verify", "atoms-product", "--max-n", "10", "--timing")
    assert code == 0 and "elapsed" in err and "elapsed" not in out


def test_console_output_is_deterministic():
    argv = [sys.executable, "-m", "lucas_atoms", "verify", "gate-oracle", "--count", "40", "--format", "json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv + ["--jobs", "2"], capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["count"] == 40
