from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from oddstab import cli, graph6
from oddstab.constructions import h_graph
from oddstab.search import PointResult, VerificationReport


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def strip_timing(text):
    d = json.loads(text)
    d.pop("timing")
    return d


def test_construct_stats(capsys):
    code, out, _ = run(["construct", "h:n=10,t=1", "--stats"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == graph6.encode(h_graph(10, 1))
    assert lines[1:] == ["n: 10", "e: 19", "d2: 1", "gamma2: 1", "bipartite: false"]


def test_verify_t11_json(capsys):
    code, out, _ = run(["verify", "T1.1", "--k", "2", "--n", "6..9", "--json"], capsys)
    assert code == 0
    d = json.loads(out)
    (res,) = d["results"]
    assert [p["params"]["n"] for p in res["points"]] == [6, 7, 8, 9]
    assert all(p["passed"] for p in res["points"])
    assert [p["observed"] for p in res["points"]] == [9, 12, 16, 20]
    assert d["summary"]["passed"] is True and set(d["timing"]) == {"seconds", "threads"}


def test_verify_hypothesis_refused(capsys):
    code, out, err = run(["verify", "T1.1", "--k", "2", "--n", "3"], capsys)
    assert code == 2 and out == "" and "4k-2" in err


def test_size_refusal(capsys):
    code, _, err = run(["extremal", "--n", "11"], capsys)
    assert code == 3 and "refused" in err
    code, _, _ = run(["analyze", graph6.encode(h_graph(30, 1)), "--d2"], capsys)
    assert code == 3


def test_usage_errors(capsys):
    assert run(["frobnicate"], capsys)[0] == 2
    assert run(["analyze", "not graph6!"], capsys)[0] == 2
    assert run(["construct", "h:n=2,t=1"], capsys)[0] == 2
    assert run(["verify", "T1.1", "--n", "9..6", "--k", "2"], capsys)[0] == 2


def test_analyze_stdin(capsys, monkeypatch):
    text = "C~\nDhc\n"  # K4 and C5
    code, out, _ = run(["analyze", "-", "--d2", "--gamma2", "--oddgirth", "--json"], capsys, text, monkeypatch)
    assert code == 0
    res = json.loads(out)["results"]
    assert [(r["d2"], r["gamma2"], r["odd_girth"]) for r in res] == [(2, 2, 3), (1, 1, 5)]


def test_enumerate_and_extremal(capsys):
    code, out, _ = run(["enumerate", "--n", "5", "--triangle-free", "--non-bipartite"], capsys)
    assert code == 0 and out.split() == ["DLo"]
    code, out, _ = run(["enumerate", "--n", "6", "--count"], capsys)
    assert out.strip() == "156"
    code, out, _ = run(["extremal", "--n", "7", "--forbid", "5", "--json"], capsys)
    assert json.loads(out)["results"][0]["max_edges"] == 12


def test_peel_and_decompose(capsys):
    g = graph6.encode(h_graph(40, 1))
    code, out, _ = run(["peel", g, "--json"], capsys)
    res = json.loads(out)["results"][0]
    assert code == 0 and [r[1] for r in res["removed"]] == [38, 39]
    code, out, _ = run(["decompose", g, "--t", "1", "--k", "2", "--json"], capsys)
    assert code == 0 and "flags" in json.loads(out)["results"][0]
    assert run(["decompose", g, "--t", "0", "--k", "2"], capsys)[0] == 2


def test_counterexample_printed_first(capsys, monkeypatch):
    bad = PointResult({"n": 5}, False, None, None, 1, "DLo")
    fake = VerificationReport("T1.5", "fake", {}, (bad,))
    monkeypatch.setattr(cli, "verify_theorem", lambda *a, **k: fake)
    code, out, _ = run(["verify", "T1.5", "--n", "5"], capsys)
    assert code == 1
    assert out.splitlines()[0] == "DLo"
    code, out, err = run(["verify", "T1.5", "--n", "5", "--json"], capsys)
    assert code == 1 and err.splitlines()[0] == "DLo"
    assert json.loads(out)["counterexamples"] == ["DLo"]


def test_reports_identical_across_thread_counts(capsys):
    argv = ["verify", "T1.2", "--n", "5..8", "--json"]
    _, a, _ = run(argv + ["--threads", "1"], capsys)
    _, b, _ = run(argv + ["--threads", "3"], capsys)
    assert strip_timing(a) == strip_timing(b)
    assert json.dumps(strip_timing(a), sort_keys=True) == json.dumps(strip_timing(b), sort_keys=True)


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "oddstab.cli", "verify", "identities", "--max", "50"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.rstrip().splitlines()[-1].startswith("PASS")
