import csv
import io
import json
import subprocess
import sys

import pytest

from quarticrank.cli import COLUMNS, OutputRow, compute_row, main
from quarticrank.basefield import make_basefield


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return [OutputRow.from_csv(r) for r in csv.DictReader(io.StringIO(text))]


def test_rank_examples(capsys):
    code, out, _ = run(capsys, "rank", "--l", "41", "--n", "89")
    assert code == 0
    (row,) = rows(out)
    assert row.rank == 1 and row.n_factors == "89" and row.conductor == 89 * 41
    code, out, _ = run(capsys, "rank", "--l", "17", "--n", "1")
    assert code == 0 and rows(out)[0].rank == 0


@pytest.mark.parametrize("l, n", [("21", "2"), ("13", "3"), ("17", "12"), ("17", "34"),
                                  ("17", "0")])
def test_rank_domain_errors(capsys, l, n):
    code, out, err = run(capsys, "rank", "--l", l, "--n", n)
    assert code == 2 and out == "" and err.startswith("error:")


def test_rank_error_message(capsys):
    _, _, err = run(capsys, "rank", "--l", "21", "--n", "2")
    assert "l must be 2 or a prime ≡ 1 (mod 8)" in err


@pytest.mark.parametrize("path", ["generic", "closed", "both"])
def test_rank_paths_agree(capsys, path):
    _, out, _ = run(capsys, "rank", "--l", "97", "--n", str(2 * 71 * 83), "--path", path)
    assert rows(out)[0].rank == 3


def test_usage_errors(capsys):
    assert main(["rank", "--l", "17"]) == 2
    assert main(["bogus"]) == 2
    assert main(["rank", "--l", "x", "--n", "1"]) == 2
    capsys.readouterr()


def test_enumerate_rank0_l2(capsys):
    code, out, _ = run(capsys, "enumerate", "--l", "2", "--n-max", "100", "--rank", "0")
    assert code == 0
    assert [r.n for r in rows(out)] == [1, 3, 7, 11, 19, 23, 31, 43, 47, 59, 67, 71, 79, 83]


def test_enumerate_single_and_inclusion(capsys):
    _, out, _ = run(capsys, "enumerate", "--l", "17", "--n-max", "1")
    assert [(r.n, r.rank) for r in rows(out)] == [(1, 0)]
    _, out, _ = run(capsys, "enumerate", "--l", "41", "--n-max", "200", "--rank", "1")
    assert 89 in [r.n for r in rows(out)]
    assert main(["enumerate", "--l", "17", "--n-max", "0"]) == 2
    capsys.readouterr()


def test_csv_round_trip(capsys):
    _, out, _ = run(capsys, "enumerate", "--l", "73", "--n-max", "300")
    assert out.splitlines()[0] == ",".join(COLUMNS)
    assert "\r" not in out
    k = make_basefield(73)
    parsed = rows(out)
    assert parsed == [compute_row(r.n, k) for r in parsed]
    assert [r.n for r in parsed] == sorted(r.n for r in parsed)


def test_json_lines(capsys):
    _, out, _ = run(capsys, "enumerate", "--l", "2", "--n-max", "20", "--format", "json")
    recs = [json.loads(line) for line in out.splitlines()]
    assert list(recs[0]) == list(COLUMNS)
    assert recs[0]["n"] == 1


def test_workers_keep_order(capsys):
    _, serial, _ = run(capsys, "enumerate", "--l", "41", "--n-max", "600")
    _, parallel, _ = run(capsys, "enumerate", "--l", "41", "--n-max", "600", "--workers", "3")
    assert serial == parallel


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--l", "2", "--rank", "0")
    assert code == 0 and len(out.splitlines()) == 2
    _, out, _ = run(capsys, "classify", "--l", "17", "--rank", "3", "--format", "json")
    recs = [json.loads(line) for line in out.splitlines()]
    assert len(recs) == 11 and recs[-1]["tag"] == "L1mod8/r3/c11"
    code, _, err = run(capsys, "classify", "--l", "17", "--rank", "4")
    assert code == 2 and "0..3" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--only", "corpus", "--l", "2")
    assert code == 0 and "36/36" in out
    code, out, _ = run(capsys, "verify", "--sweep-max", "0")
    assert code == 0 and "sweep" not in out
    code, out, _ = run(capsys, "verify", "--sweep-max", "300")
    assert code == 0 and out.count("sweep l=") == 8
    code, out, _ = run(capsys, "verify", "--quiet", "--sweep-max", "300")
    assert code == 0 and "sweep l=" not in out
    assert main(["verify", "--l", "13"]) == 2
    capsys.readouterr()


def test_verify_reports_failure(capsys, monkeypatch):
    from quarticrank import cli
    monkeypatch.setattr(cli, "sweep", lambda l, n_max: [f"l={l} n=1: injected"])
    code, out, _ = run(capsys, "verify", "--sweep-max", "5", "--l", "17")
    assert code == 1 and "FAIL sweep" in out and "FAILED" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quarticrank", "rank", "--l", "2", "--n", "59"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1].split(",")[5] == "0"
