import csv
import io
import json

import pytest

from circulant.chordal import validate_witness
from circulant.cli import AnalyzeResult, main, parse_set
from circulant.core import build


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_parse_set():
    assert parse_set("2,3,4,7") == [2, 3, 4, 7]
    assert parse_set("1-4") == [1, 2, 3, 4]
    assert parse_set("1-2,5") == [1, 2, 5]
    assert parse_set("") == []
    with pytest.raises(ValueError):
        parse_set("4-1")


def test_analyze_witness_json():
    code, text = run("analyze", "--n", "15", "--set", "2,3,4,7", "--witness", "--format", "json")
    assert code == 0
    doc = json.loads(text)
    assert set(doc) == set(AnalyzeResult.__dataclass_fields__)
    assert doc["chordal_structural"] is doc["chordal_oracle"] is False
    # separate verification pass on the emitted document
    assert validate_witness(build(15, (2, 3, 4, 7)), doc["witness"]["vertices"])
    assert doc["witness"]["strategy"] == "orda-1S"


def test_witness_alias():
    _, a = run("witness", "--n", "10", "--set", "3,4", "--format", "json")
    _, b = run("analyze", "--n", "10", "--set", "3,4", "--witness", "--format", "json")
    assert a == b
    assert json.loads(a)["witness"]["vertices"] == [0, 6, 2, 5, 1, 7]


def test_analyze_complete():
    code, text = run("analyze", "--n", "6", "--set", "1,2,3", "--format", "json")
    doc = json.loads(text)
    assert code == 0 and doc["chordal_oracle"] and doc["nu_formula"] == 1
    assert doc["witness"] is None and doc["regularity"] is None


def test_analyze_disconnected_with_extras():
    _, text = run("analyze", "--n", "12", "--set", "3,6", "--oracle", "--reg", "--format", "json")
    doc = json.loads(text)
    assert doc["component_count"] == 3 and not doc["connected"]
    assert doc["chordal_structural"] and doc["nu_oracle"] == 3
    assert doc["regularity"] == 3 and doc["field_char"] == 2


def test_analyze_text_and_csv():
    code, text = run("analyze", "--n", "15", "--set", "2,3,4,7", "--witness")
    assert code == 0 and "orda-1S" in text
    _, text = run("analyze", "--n", "15", "--set", "1-2", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows[0]["S"] == "1+2" and rows[0]["nu_formula"] == "3"


@pytest.mark.parametrize("argv", [
    ("analyze", "--n", "8", "--set", "5"),
    ("analyze", "--n", "8", "--set", "x"),
    ("betti", "--n", "1", "--set", ""),
])
def test_invalid_input_exit_2(argv, capsys):
    assert main(list(argv), out=io.StringIO()) == 2
    assert "invalid input" in capsys.readouterr().err


def test_bound_exit_3(capsys):
    assert main(["betti", "--n", "17", "--set", "1"], out=io.StringIO()) == 3
    assert main(["table", "--max-n", "17", "--reg"], out=io.StringIO()) == 3
    assert "exceeds" in capsys.readouterr().err


@pytest.mark.parametrize("n,S,reg", [("5", "1", 2), ("4", "1,2", 1), ("6", "1", 2)])
def test_betti(n, S, reg):
    code, text = run("betti", "--n", n, "--set", S, "--char", "2", "--format", "json")
    doc = json.loads(text)
    assert code == 0 and doc["regularity"] == reg
    if S == "1,2":
        assert [1, 2, 6] in doc["betti"]


def test_betti_text_and_csv():
    _, text = run("betti", "--n", "5", "--set", "1")
    assert "regularity: 2" in text
    _, text = run("betti", "--n", "5", "--set", "1", "--format", "csv", "--no-symmetry")
    assert text.splitlines()[0] == "i,j,beta"
    assert "3,5,1" in text


def test_table_rows():
    _, text = run("table", "--max-n", "10", "--oracle", "--reg", "--format", "json")
    rows = {r["graph"]: r for r in json.loads(text)["rows"]}
    assert (rows["C_9({1,2,3})"]["nu_formula"], rows["C_9({1,2,3})"]["reg"]) == (1, 2)
    assert (rows["C_10({1,2,3,4})"]["nu_oracle"], rows["C_10({1,2,3,4})"]["reg"]) == (1, 1)
    _, text = run("table", "--max-n", "8", "--format", "csv")
    lines = text.splitlines()
    assert lines[0] == "graph,n,d,nu_formula,nu_oracle,reg"
    assert lines[1] == "C6(1),6,1,2,,"


def test_audit_json_shape():
    code, text = run("audit", "--max-n", "8", "--mode", "all-sets", "--format", "json")
    doc = json.loads(text)
    assert code == 0
    assert set(doc) == {"mode", "rows", "summary"}
    row = next(r for r in doc["rows"] if r["n"] == 8 and r["S"] == [1, 4])
    assert row["status"] == "differ"
    assert doc["summary"]["differ"] > 0


def test_audit_cycle_powers_and_chordality(capsys):
    _, text = run("audit", "--max-n", "15", "--mode", "cycle-powers")
    assert "differ=0" in text.splitlines()[-1]
    _, text = run("audit", "--max-n", "12", "--mode", "chordality", "--witness", "--format", "csv")
    assert text.startswith("n,S,structural,oracle,agree,witness_strategy,witness_valid")
    assert "disagree=0" in capsys.readouterr().err


def test_output_is_deterministic():
    argv = ("audit", "--max-n", "9", "--mode", "all-sets", "--format", "csv")
    assert run(*argv) == run(*argv) == run(*argv, "--jobs", "2")
    argv = ("betti", "--n", "11", "--set", "1,3", "--format", "json")
    assert run(*argv) == run(*argv, "--jobs", "3")
