import csv
import io
import json

import pytest

from incseq.cli import main, parse_perm, UsageFailure


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# table

def test_table_unitary(capsys):
    code, out, _ = run(capsys, "table", "--sym", "U", "--n", "4", "--l", "4")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 16
    assert all(r["match"] == "true" for r in rows)
    r = next(r for r in rows if r["n"] == "3" and r["l"] == "2")
    assert r["f_bruteforce"] == r["f_series"] == "5"


def test_table_n0(capsys):
    code, out, _ = run(capsys, "table", "--sym", "O", "--n", "0")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 1 and rows[0]["f_bruteforce"] == "1"


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--sym", "UU", "--n", "2", "--l", "2", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 4


def test_table_unknown_symmetry(capsys):
    code, out, err = run(capsys, "table", "--sym", "Q")
    assert code == 2 and not out and "unknown symmetry" in err


def test_table_guard(capsys):
    code, _, err = run(capsys, "table", "--sym", "O", "--n", "40")
    assert code == 2 and "guard" in err


# verify

def test_verify_pfaffian(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "pfaffian", "--seed", "7", "--cases", "100")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass"


def test_verify_degree_zero_is_vacuous(capsys):
    code, out, err = run(capsys, "verify", "--suite", "schur", "--deg", "0")
    assert code == 0 and "warning" in err
    rep = json.loads(out)
    assert rep["status"] == "pass" and rep["warnings"]


def test_verify_schur_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "schur", "--l", "2", "--vars", "3", "--deg", "6")
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_verify_usage(capsys):
    assert run(capsys, "verify", "--suite", "nope")[0] == 2
    assert run(capsys, "verify", "--suite", "schur", "--l", "-1")[0] == 2
    assert run(capsys, "verify", "--suite", "schur", "--jobs", "0")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys)[0] == 2


def test_verify_is_deterministic(capsys):
    args = ("verify", "--suite", "pfaffian", "--seed", "3", "--cases", "20")
    a = run(capsys, *args)[1]
    b = run(capsys, *args)[1]
    assert a == b


# rsk

def test_rsk_empty(capsys, monkeypatch):
    code, out, _ = run(capsys, "rsk", stdin='{"entries": [], "W1": [], "W2": []}', monkeypatch=monkeypatch)
    rep = json.loads(out)
    assert code == 0 and rep["P"] == rep["Q"] == [] and rep["shape"] == []


def test_rsk_sample_file(capsys, tmp_path):
    f = tmp_path / "m.json"
    f.write_text(json.dumps({"entries": [[1, 2], [2, 1], [3, 3, 2]], "W1": [3], "W2": [3]}))
    code, out, _ = run(capsys, "rsk", "--input", str(f))
    rep = json.loads(out)
    assert code == 0 and rep["round_trip"] and rep["greene_verified"]
    assert sum(rep["shape"]) == 4 and rep["lis"] == rep["shape"][0]
    assert rep["greene"]["rows"][-1] == 4


@pytest.mark.parametrize("text,where", [
    ("{", "line 1"),
    ('{"entries": [[1, "a"]]}', "entries[0]"),
    ('{"entries": [[1, 1, -2]]}', "entries[0]"),
    ('{"entries": [], "W1": "x"}', "W1"),
    ("[]", "top level"),
    ('{"entries": [[1, 1, 2]], "W1": [1]}', "compatible"),
])
def test_rsk_malformed(capsys, monkeypatch, text, where):
    code, out, err = run(capsys, "rsk", stdin=text, monkeypatch=monkeypatch)
    assert code == 2 and not out and where in err


def test_rsk_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "rsk", "--input", str(tmp_path / "none.json"))
    assert code == 2 and "cannot read" in err


# opuc

def test_opuc_command(capsys):
    code, out, _ = run(capsys, "opuc", "--l", "3", "--deg", "6")
    rep = json.loads(out)
    assert code == 0 and all(rep["checks"].values())
    assert rep["reflection"]["1"][:4] == ["0", "-1", "0", "1/2"]


# straighten

def test_straighten_321(capsys):
    code, out, _ = run(capsys, "straighten", "--perm", "321", "--l", "2")
    rep = json.loads(out)
    assert code == 0 and rep["terms"] == 5
    assert rep["certificates"] == {"reduced": True, "operator_equal": True}
    assert {t["perm"] for t in rep["result"]} == {"123", "132", "213", "231", "312"}


@pytest.mark.parametrize("kind", ["O", "Sp"])
def test_straighten_involutions(capsys, kind):
    code, out, _ = run(capsys, "straighten", "--perm", "4,3,2,1", "--l", "1", "--kind", kind)
    rep = json.loads(out)
    assert code == 0 and all(rep["certificates"].values())


def test_straighten_usage(capsys):
    assert run(capsys, "straighten")[0] == 2
    assert run(capsys, "straighten", "--perm", "322")[0] == 2
    assert run(capsys, "straighten", "--perm", "321", "--n", "4")[0] == 2
    assert run(capsys, "straighten", "--perm", "231", "--kind", "O")[0] == 2
    assert run(capsys, "straighten", "--perm", "987654321", "--l", "9")[0] == 2


def test_parse_perm():
    assert parse_perm("3,2,1") == parse_perm("321") == (3, 2, 1)
    with pytest.raises(UsageFailure):
        parse_perm("1x")
