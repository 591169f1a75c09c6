import csv
import io
import json
import subprocess
import sys

import pytest

from dasasm.cli import main, parse_q, parse_range, parse_u
from dasasm.errors import InputError
from dasasm.exact import zeta


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_parse_helpers():
    assert parse_range("0..3") == [0, 1, 2, 3]
    assert parse_range("1,3") == [1, 3]
    assert parse_range("4") == [4]
    with pytest.raises(InputError):
        parse_range("3..1")
    with pytest.raises(InputError):
        parse_range("x")
    assert parse_q(None) == zeta(12)
    assert parse_q(["symbolic"]) is None
    assert parse_q(["zeta", "8", "3"]) == zeta(8, 3)
    assert parse_q(["7/3"]) * 3 == 7
    with pytest.raises(InputError):
        parse_q(["zeta"])
    assert parse_u("2", 3) == [2, 2, 2]
    assert parse_u(None, 2) == [1, 1]


def test_count_table_json():
    code, text = run("count", "--class", "dasasm", "--split-center", "--n", "0..7", "--format", "json")
    assert code == 0
    rows = json.loads(text)
    assert [r["count"] for r in rows] == [1, 3, 15, 126, 1782, 42471, 1706562, 115640460]
    assert rows[7]["minus"] == 53965548
    assert all(r["agree"] for r in rows)


def test_count_csv_and_text():
    code, text = run("count", "--class", "asm", "--n", "1..5", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [int(r["count"]) for r in rows] == [1, 2, 7, 42, 429]
    code, text = run("count", "--class", "vhsasm", "--n", "3,5")
    assert code == 0
    assert text.splitlines()[0].split()[:3] == ["n", "order", "count"]


def test_count_split_needs_odd_order():
    code, _ = run("count", "--class", "htsasm", "--n", "4", "--split-center")
    assert code == 2


def test_count_bounds():
    assert run("count", "--n", "0..20")[0] == 2
    assert run("count", "--n", "0..5", "--max-n", "3")[0] == 2
    assert run("count", "--class", "asm", "--n", "12")[0] == 2


def test_verify_json_schema_and_determinism():
    code, a = run("verify", "--suite", "theorem-full", "--n", "1", "--trials", "3", "--seed", "4")
    _, b = run("verify", "--suite", "theorem-full", "--n", "1", "--trials", "3", "--seed", "4")
    assert code == 0
    assert a == b
    doc = json.loads(a)
    assert set(doc) == {"ok", "summary", "results"}
    assert doc["ok"] is True
    for r in doc["results"]:
        assert set(r) <= {"relation", "case", "status", "witness"}
        assert r["status"] == "pass"


def test_verify_text_and_conjecture_status():
    code, text = run("verify", "--suite", "q3-conjecture", "--n", "1..3", "--format", "text")
    assert code == 0
    lines = text.splitlines()
    assert sum(line.startswith("CONJECTURE-CONFIRMED") for line in lines) == 6
    assert json.loads(lines[-1]) == {"CONJECTURE-CONFIRMED": 6}


def test_verify_comma_list():
    code, text = run("verify", "--suite", "weights,htsasm-ratio", "--n", "1..2")
    assert code == 0
    assert json.loads(text)["summary"] == {"pass": 66}


def test_verify_unknown_suite():
    assert run("verify", "--suite", "bogus")[0] == 2


def test_eval_values():
    assert run("eval", "z", "--n", "5", "--u", "1")[1].strip() == "42471"
    assert run("eval", "z-minus", "--n", "2")[1].strip() == "6"
    assert run("eval", "rhs-u1", "--n", "3")[1].strip() == "126"
    a = run("eval", "z", "--n", "2", "--u", "2,3,5", "--q", "7/3")[1]
    b = run("eval", "rhs-full", "--n", "2", "--u", "2,3,5", "--q", "7/3")[1]
    assert a == b
    assert run("eval", "schur-rhs", "--n", "1", "--u", "2,3")[1] == run("eval", "z", "--n", "1", "--u", "2,3")[1]


def test_eval_json_and_symbolic():
    code, text = run("eval", "z", "--n", "1", "--symbolic", "--format", "json")
    assert code == 0
    doc = json.loads(text)
    assert doc["cleared"] is True and doc["q"] == "symbolic"
    assert "u1" in doc["value"] and "q" in doc["value"]
    code, text = run("eval", "z", "--n", "2", "--format", "json")
    assert json.loads(text)["value"] == "15"


def test_eval_errors(capsys):
    code, _ = run("eval", "rhs-full", "--n", "1", "--u", "2,3", "--q", "zeta", "8", "1")
    assert code == 2
    assert "sigma(q^4)" in capsys.readouterr().err
    assert run("eval", "schur-rhs", "--n", "1", "--q", "2")[0] == 2
    assert run("eval", "z", "--n", "1", "--u", "1,2,3")[0] == 2
    assert run("eval", "rhs-full", "--n", "1", "--symbolic")[0] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dasasm.cli", "eval", "z", "--n", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "126"
