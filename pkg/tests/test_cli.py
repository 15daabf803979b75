from __future__ import annotations

import csv
import io
import json

import pytest

from golden import TABLE_Q4
from hermit2p.cli import run
from hermit2p.quantum import QuantumCodeParams


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_curve(capsys):
    code, out, _ = call(capsys, "curve", "--q", "2")
    assert code == 0 and out.splitlines()[0] == "0,1" and len(out.splitlines()) == 7
    code, out, _ = call(capsys, "curve", "--q", "2", "--emit", "affine")
    assert len(out.splitlines()) == 8
    code, out, _ = call(capsys, "curve", "--q", "8", "--emit", "constants")
    assert json.loads(out) == {"q": 8, "genus": 28, "n": 511, "deg_H": 9, "deg_K": 54}


def test_basis(capsys):
    code, out, _ = call(capsys, "basis", "--q", "2", "--divisor", "6P-2Q")
    assert code == 0 and sorted(out.split()) == ["0,1", "0,2", "1,1", "2,0"]


def test_code(capsys):
    code, out, _ = call(capsys, "code", "--q", "2", "--divisor", "0")
    data = json.loads(out)
    assert data["k"] == 1 and data["generator"] == [[1] * 7] and data["divisor"] == {"i": 0, "j": 0}


def test_tables_formats(capsys):
    _, out, _ = call(capsys, "tables", "--q", "4")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["delta", "dim_one_point", "dim_two_point", "r"]
    assert [tuple(map(int, r)) for r in rows[1:]] == TABLE_Q4
    _, out, _ = call(capsys, "tables", "--q", "4", "--format", "json")
    assert json.loads(out)[0] == {"delta": 5, "dim_one_point": 53, "dim_two_point": 55, "r": 3}
    _, out, _ = call(capsys, "tables", "--q", "4", "--format", "text")
    assert "55" in out.splitlines()[1]


def test_params(capsys):
    _, out, _ = call(capsys, "params", "--q", "4", "--r", "5")
    data = json.loads(out)
    assert data["two_point"] == {"n": 63, "k": 53, "d": 7} and (data["c"], data["a"]) == (2, 1)


def test_aqecc_round_trip(capsys):
    _, out, _ = call(capsys, "aqecc", "--q", "4", "--r1", "3", "--r2", "8")
    rec = QuantumCodeParams.from_dict(json.loads(out))
    assert (rec.k, rec.d_z, rec.d_x) == (42, 9, 6)
    _, out, _ = call(capsys, "aqecc", "--q", "4", "--r1", "5", "--r2", "9", "--one-point")
    assert json.loads(out)["k"] == 39
    _, out, _ = call(capsys, "aqecc", "--q", "2", "--r1", "2", "--r2", "3", "--oracle")
    assert json.loads(out)["purity"] == "pure"


def test_search_csv(capsys):
    _, out, _ = call(capsys, "search", "--q", "2")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["k", "d_z", "d_x", "G1_i", "G1_j", "G2_i", "G2_j"]
    assert all(r[2] == "" for r in rows[1:])


def test_search_deterministic_across_threads(capsys):
    outs = {call(capsys, "--threads", t, "search", "--q", "2", "--oracle")[1] for t in ("1", "3")}
    assert len(outs) == 1


def test_output_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    assert run(["--output", str(path), "tables", "--q", "4"]) == 0
    assert capsys.readouterr().out == ""
    assert path.read_text().startswith("delta,")


@pytest.mark.parametrize(
    "argv",
    [
        ["tables", "--q", "5"],
        ["basis", "--q", "2", "--divisor", "banana"],
        ["params", "--q", "4", "--r", "99"],
        ["aqecc", "--q", "2", "--r1", "5", "--r2", "6"],
        ["code", "--q", "2", "--divisor", "20P"],
        ["--threads", "0", "tables", "--q", "4"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == 1


def test_budget_exceeded_is_usage_error(capsys):
    assert run(["aqecc", "--q", "3", "--r1", "0", "--r2", "12", "--oracle", "--budget", "2"]) == 1


def test_verify_exit_codes(capsys):
    code, out, _ = call(capsys, "verify", "--q", "3", "--suite", "duality")
    assert code == 0 and "all checks match" in out
    code, out, _ = call(capsys, "verify", "--q", "2", "--suite", "distance")
    # the closed-form distance is one short of the truth at q = 2, r = 6
    assert code == 2 and "r=6" in out
