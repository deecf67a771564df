import json
import subprocess
import sys
from pathlib import Path

import pytest

from idemring.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list_text(capsys):
    assert run(capsys, "list", "30", "--method", "prop51") == (0, "0 1 6 10 15 16 21 25\n", "")
    assert run(capsys, "list", "4")[1] == "0 1\n"


def test_list_json_schema(capsys):
    code, out, _ = run(capsys, "list", "420", "--method", "prop52", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert list(doc) == ["n", "k", "factors", "method", "members"]
    assert doc["n"] == 420 and doc["k"] == 4 and doc["method"] == "prop52"
    assert doc["factors"] == [[2, 2], [3, 1], [5, 1], [7, 1]]
    assert len(doc["members"]) == 16


@pytest.mark.parametrize("method", ["prop51", "prop52", "prop53", "scan", "crt"])
def test_list_formats_agree(capsys, method):
    n = "13860"
    text = run(capsys, "list", n, "--method", method)[1].split()
    tsv = run(capsys, "list", n, "--method", method, "--format", "tsv")[1]
    doc = json.loads(run(capsys, "list", n, "--method", method, "--format", "json")[1])
    rows = tsv.split("\n")
    assert rows[0] == "n\tresidue" and rows[-1] == ""
    from_tsv = [int(r.split("\t")[1]) for r in rows[1:-1]]
    assert [int(x) for x in text] == from_tsv == doc["members"]
    assert len(doc["members"]) == 32


@pytest.mark.parametrize("bad", ["1", "0", "-3", "abc", str(2**64)])
def test_list_bad_n(capsys, bad):
    code, out, err = run(capsys, "list", bad)
    assert code == 2 and out == "" and "error" in err


def test_list_scan_over_ceiling(capsys, monkeypatch):
    monkeypatch.setenv("IDEMRING_SCAN_CEILING", "1000")
    code, out, err = run(capsys, "list", "1001", "--method", "scan")
    assert code == 2 and out == ""
    assert run(capsys, "list", "1001", "--method", "crt")[0] == 0


def test_unknown_method_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["list", "30", "--method", "magic"])
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "n, method, golden",
    [
        ("13860", "auto", "n13860_auto.tsv"),
        ("420", "auto", "n420_auto.tsv"),
        ("420", "prop52", "n420_prop52.tsv"),
    ],
)
def test_table_golden(capsys, n, method, golden):
    code, out, _ = run(capsys, "table", n, "--method", method, "--format", "tsv")
    assert code == 0
    assert out.encode() == (GOLDEN / golden).read_bytes()


def test_table_prop53_columns(capsys):
    out = run(capsys, "table", "420", "--method", "prop53", "--format", "tsv")[1]
    lines = out.splitlines()
    assert lines[0] == "h+\tp\tm\tt\tr\t(p-r)m"
    assert len(lines) == 15
    assert lines[-1].split("\t")[-1] == "316"


def test_table_row_counts(capsys):
    from math import comb

    for n, k in [(13860, 5), (420, 4), (30030, 6)]:
        rows = run(capsys, "table", str(n), "--format", "tsv")[1].splitlines()[1:]
        half = sum(comb(k, h) for h in range(1, (k - 1) // 2 + 1))
        want = half + (comb(k, k // 2) // 2 if k % 2 == 0 else 0)
        assert len(rows) == want
        rows = run(capsys, "table", str(n), "--method", "prop52", "--format", "tsv")[1]
        assert len(rows.splitlines()) - 1 == 2**k - 2


def test_table_prime_power(capsys):
    code, out, err = run(capsys, "table", "8", "--format", "tsv")
    assert code == 0 and out == "h+\tp\tm\tt\tr\trm+1\t(p-r)m\n"
    assert "prime power" in err
    assert "no coprime splits" in run(capsys, "table", "8")[1]


def test_table_text_and_json(capsys):
    text = run(capsys, "table", "420")[1]
    assert "2^2*5" in text and "400" in text
    doc = json.loads(run(capsys, "table", "420", "--format", "json")[1])
    assert len(doc["rows"]) == 7
    assert doc["rows"][5] == {"h": 2, "p": 20, "m": 21, "t": 1, "r": 19,
                              "e_plus": 400, "e_zero": 21}


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--max", "1000")
    assert code == 0
    assert out.startswith("999 values checked, ")
    assert out.rstrip().endswith(" 0 violations")
    assert run(capsys, "verify", "--max", "2")[0] == 0


def test_verify_over_ceiling(capsys, monkeypatch):
    monkeypatch.setenv("IDEMRING_SCAN_CEILING", "500")
    assert run(capsys, "verify", "--max", "501")[0] == 2


def test_verify_reports_violation(capsys, monkeypatch):
    import dataclasses

    import idemring.verify as verify

    real = verify.solve_split_usearch

    def broken(split):
        sol = real(split)
        return dataclasses.replace(sol, u=sol.u + 1) if split.n == 30 else sol

    monkeypatch.setattr(verify, "solve_split_usearch", broken)
    code, out, _ = run(capsys, "verify", "--max", "40")
    assert code == 1
    assert "first violation: n=30: bezout/u-search agreement" in out


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--max", "300", "--reps", "1")
    assert code == 0
    assert "disagreements: 0" in out and "bound violations: 0" in out
    for name in ("bezout", "usearch", "naive"):
        assert name in out
    assert run(capsys, "bench", "--reps", "0")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "idemring", "list", "338"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "0 1 169 170\n"
