import csv
import io
import subprocess
import sys
from pathlib import Path

import pytest

from fuzzygraph.cli import SWEEP_HEADER, main

DATA = Path(__file__).parent / "data"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_analyze_c4():
    code, text = run("analyze", str(DATA / "c4.txt"))
    assert code == 0
    assert "WI: 5.2\n" in text
    assert "CI: 3.6\n" in text
    assert "a-b  0.8  alpha" in text
    assert "b-c  0.5  beta" in text


def test_analyze_c6_table():
    code, text = run("analyze", str(DATA / "c6.txt"))
    assert code == 0
    ds_block = text.split("geodesic distance d_s(u, v)\n")[1].split("\n\n")[0].splitlines()
    header = ds_block[0].split()
    table = {line.split()[0]: dict(zip(header, line.split()[1:])) for line in ds_block[1:]}
    assert table["a"]["d"] == "1.8"
    assert table["a"]["b"] == "0.8"
    assert table["b"]["e"] == "1.8"
    assert table["a"]["a"] == "-"
    assert "WI: 17.1\n" in text


def test_analyze_malformed(capsys):
    code, _ = run("analyze", str(DATA / "malformed.txt"))
    assert code == 2
    assert "line 3" in capsys.readouterr().err


def test_analyze_missing_file(capsys):
    code, _ = run("analyze", str(DATA / "nope.txt"))
    assert code == 2


def test_analyze_undefined_wiener():
    code, text = run("analyze", str(DATA / "disconnected.txt"))
    assert code == 1
    assert "WI: undefined" in text
    assert "CI: 0.7" in text


def test_classify():
    code, text = run("classify", str(DATA / "triangle.txt"))
    assert code == 0
    assert text.splitlines() == ["a-b  0.9  alpha", "a-c  0.3  delta", "b-c  0.8  alpha"]


def test_mst():
    code, text = run("mst", str(DATA / "triangle.txt"))
    assert code == 0
    assert text.splitlines() == [
        "a-b  0.9",
        "b-c  0.8",
        "weight: 1.7",
        "unique: yes",
        "fuzzy tree: yes",
    ]
    code, text = run("mst", str(DATA / "c4.txt"))
    assert "unique: no" in text and "fuzzy tree: no" in text
    code, _ = run("mst", str(DATA / "disconnected.txt"))
    assert code == 2


def test_verify_cycle_c4():
    code, text = run("verify-cycle", "--n", "4", "--kappa", "0.8", "--eta", "0.5")
    assert code == 0
    (row,) = rows(text)
    assert float(row["wi_bruteforce"]) == pytest.approx(5.2, abs=1e-9)
    assert float(row["wi_corrected"]) == pytest.approx(5.2, abs=1e-9)
    assert float(row["wi_star"]) == pytest.approx(13.975, abs=1e-9)
    assert float(row["err_star"]) == pytest.approx(8.775, abs=1e-9)


def test_verify_cycle_c6():
    code, text = run("verify-cycle", "--n", "6", "--kappa", "0.8", "--eta", "0.5")
    assert code == 0
    assert float(rows(text)[0]["wi_corrected"]) == pytest.approx(17.1, abs=1e-9)


def test_verify_cycle_odd(capsys):
    code, _ = run("verify-cycle", "--n", "7", "--kappa", "0.8", "--eta", "0.5")
    assert code == 2
    assert "n must be even" in capsys.readouterr().err


def test_sweep():
    code, text = run("sweep", "--n-max", "8", "--trials", "1", "--seed", "1")
    assert code == 0
    assert text.splitlines()[0] == ",".join(SWEEP_HEADER)
    got = rows(text)
    assert [int(r["n"]) for r in got] == [4, 6, 8]
    for r in got:
        assert float(r["err_corrected"]) <= 1e-9
        assert float(r["err_star"]) > 0
        assert float(r["kappa"]) > float(r["eta"])


def test_sweep_empty_and_deterministic():
    code, text = run("sweep", "--n-max", "4", "--trials", "0")
    assert (code, text) == (0, ",".join(SWEEP_HEADER) + "\n")
    first = run("sweep", "--n-max", "10", "--trials", "3", "--seed", "5")
    assert first == run("sweep", "--n-max", "10", "--trials", "3", "--seed", "5")
    assert first != run("sweep", "--n-max", "10", "--trials", "3", "--seed", "6")


@pytest.mark.parametrize("n_max", ["5", "2"])
def test_sweep_rejects_bad_n_max(n_max):
    assert run("sweep", "--n-max", n_max, "--trials", "1")[0] == 2


def test_sweep_reports_mismatch(monkeypatch, capsys):
    import fuzzygraph.cli as cli

    monkeypatch.setattr(cli, "corrected_wiener", lambda spec: -1.0)
    code, text = run("sweep", "--n-max", "8", "--trials", "2", "--seed", "1")
    assert code == 1
    assert len(rows(text)) == 1
    assert "mismatch at n=4" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fuzzygraph", "analyze", str(DATA / "c4.txt")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "WI: 5.2" in proc.stdout
    bad = subprocess.run([sys.executable, "-m", "fuzzygraph", "bogus"], capture_output=True)
    assert bad.returncode == 2
