import csv
import json

import pytest

from jetcut.cli import main
from jetcut.compiler import CouplingMap, from_text
from jetcut.evaluation import RESULT_FIELDS
from jetcut.events import read_events


@pytest.fixture
def events_file(tmp_path):
    path = tmp_path / "events.jsonl"
    main(["generate", "--count", "4", "--n-particles", "6", "--spread", "0.3",
          "--seed", "1", "--out", str(path)])
    return path


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def test_generate(events_file):
    evs = read_events(events_file)
    assert len(evs) == 4 and all(e.n == 6 for e in evs)


def test_oracle(events_file, tmp_path):
    out = tmp_path / "oracle.csv"
    main(["oracle", "--events", str(events_file), "--k", "2", "--out", str(out),
          "--dump-graph", str(tmp_path / "g")])
    rows = read_csv(out)
    assert len(rows) == 4 and float(rows[0]["c_max"]) > 0
    assert len(rows[0]["partition"]) == 6
    assert (tmp_path / "g.0.txt").exists()


def test_qaoa_and_evaluate(events_file, tmp_path):
    out = tmp_path / "q.csv"
    main(["qaoa", "--events", str(events_file), "--k", "2", "--depth", "1",
          "--shots", "256", "--seed", "3", "--out", str(out)])
    rows = read_csv(out)
    assert list(rows[0]) == RESULT_FIELDS
    for r in rows:
        assert float(r["best_sample_value"]) <= float(r["c_max"]) + 1e-12
        assert r["algorithm"] == "qaoa"
    kt = tmp_path / "kt.csv"
    main(["baseline", "--algo", "kt", "--events", str(events_file), "--out", str(kt)])
    summary, hist = tmp_path / "s.json", tmp_path / "h.csv"
    main(["evaluate", "--results", str(out), str(kt), "--out", str(summary), "--hist", str(hist)])
    s = json.loads(summary.read_text())
    assert set(s) == {"qaoa", "kt"} and s["kt"]["count"] == 4


def test_compile(events_file, tmp_path):
    cmap = tmp_path / "line.txt"
    cmap.write_text("\n".join(f"{q} {q + 1}" for q in range(5)) + "\n")
    out = tmp_path / "c.txt"
    main(["compile", "--events", str(events_file), "--k", "2", "--coupling", str(cmap),
          "--out", str(out)])
    circ = from_text(out.read_text(), 6)
    line = CouplingMap.line(6)
    assert all(line.allows(*g.qubits) for g in circ.gates if len(g.qubits) == 2)
    qasm = tmp_path / "c.qasm"
    main(["compile", "--events", str(events_file), "--k", "2", "--format", "qasm",
          "--out", str(qasm)])
    assert qasm.read_text().startswith("OPENQASM 2.0;")


def test_bench_and_sweep(events_file, tmp_path, capsys):
    main(["bench", "--events", str(events_file), "--k", "2", "--algos", "qaoa,kt,kmeans,random",
          "--shots", "128", "--out", str(tmp_path / "b.csv"), "--summary", str(tmp_path / "b.json")])
    assert {r["algorithm"] for r in read_csv(tmp_path / "b.csv")} == {"qaoa", "kt", "kmeans", "random"}
    main(["sweep", "--events", str(events_file), "--param", "k", "--values", "2,3",
          "--depth", "1", "--shots", "64", "--out", str(tmp_path / "sw.csv")])
    algos = {r["algorithm"] for r in read_csv(tmp_path / "sw.csv")}
    assert algos == {"qaoa-k2", "qaoa-k3"}
    assert "median" in capsys.readouterr().out
