"""Command line entry point: ``jetcut <command> ...``."""

from __future__ import annotations

import argparse
import csv
import logging
import sys

import numpy as np

from . import compiler
from .evaluation import (aggregate, read_results, records_from_rows, write_histogram,
                         write_results, write_summary)
from .events import GeneratorConfig, generate_events, read_events, write_events
from .graph import build_graph, dump_graph
from .maxcut import brute_force_maxcut
from .pipeline import baseline_row, qaoa_row, random_row
from .qaoa import InitStrategy, QaoaConfig, optimize

log = logging.getLogger("jetcut")


def _qaoa_config(args, depth=None) -> QaoaConfig:
    return QaoaConfig(depth=depth or args.depth, shots=args.shots, seed=args.seed,
                      max_qubits=args.max_qubits, max_evals=args.max_evals,
                      init=InitStrategy(args.init))


def _add_qaoa_opts(p):
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--shots", type=int, default=1024)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-qubits", type=int, default=24)
    p.add_argument("--max-evals", type=int, default=200)
    p.add_argument("--init", choices=[s.value for s in InitStrategy], default="interpolate")


def _maybe_dump(args, event, g):
    if getattr(args, "dump_graph", None):
        dump_graph(g, f"{args.dump_graph}.{event.event_id}.txt")


def cmd_generate(args):
    cfg = GeneratorConfig(args.n_particles, args.spread, (args.emin, args.emax), args.seed)
    write_events(generate_events(cfg, args.count), args.out)


def cmd_oracle(args):
    w = csv.writer(args.out)
    w.writerow(["event_id", "k", "n", "c_max", "partition"])
    for ev in read_events(args.events):
        g = build_graph(ev, args.k)
        _maybe_dump(args, ev, g)
        res = brute_force_maxcut(g)
        w.writerow([ev.event_id, args.k, g.n, repr(res.value), res.best.bitstring])


def cmd_qaoa(args):
    cfg = _qaoa_config(args)
    rows = []
    for ev in read_events(args.events):
        if args.dump_graph:
            _maybe_dump(args, ev, build_graph(ev, args.k))
        rows.append({"algorithm": "qaoa", **qaoa_row(ev, args.k, cfg)})
    write_results(rows, args.out)


def cmd_baseline(args):
    rows = [baseline_row(ev, args.algo) for ev in read_events(args.events)]
    write_results(rows, args.out)


def cmd_compile(args):
    events = read_events(args.events)
    ev = next((e for e in events if e.event_id == args.event_id), None) if args.event_id is not None else events[0]
    if ev is None:
        raise SystemExit(f"event {args.event_id} not found")
    g = build_graph(ev, args.k)
    params = optimize(g, _qaoa_config(args)).params
    circ = compiler.lower(g, params)
    if args.coupling != "all2all":
        routed = compiler.route(circ, compiler.CouplingMap.from_file(args.coupling))
        circ = routed.circuit
        print("final layout (logical -> physical):", " ".join(map(str, routed.layout)))
    text = compiler.to_qasm(circ) if args.format == "qasm" else compiler.to_text(circ)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    st = compiler.stats(circ)
    print(f"cnot={st.cnot_count} single_qubit={st.single_qubit_count} "
          f"swap={st.swap_count} depth={st.depth}")


def cmd_evaluate(args):
    rows = [r for path in args.results for r in read_results(path)]
    summary = aggregate(records_from_rows(rows), bins=args.bins)
    write_summary(summary, args.out)
    if args.hist:
        write_histogram(summary, args.hist)
    for algo, s in summary.items():
        print(f"{algo:8s} n={s['count']} valid={s['valid_count']} "
              f"mean={s['mean']} median={s['median']}")


def _run_algos(events, algos, k, cfg, seed):
    rows = []
    rng = np.random.default_rng(seed)
    for ev in events:
        for algo in algos:
            if algo == "qaoa":
                rows.append({"algorithm": "qaoa", **qaoa_row(ev, k, cfg)})
            elif algo == "random":
                rows.append(random_row(ev, rng))
            else:
                rows.append(baseline_row(ev, algo))
    return rows


def cmd_bench(args):
    events = read_events(args.events)
    rows = _run_algos(events, args.algos.split(","), args.k, _qaoa_config(args), args.seed)
    if args.out:
        write_results(rows, args.out)
    summary = aggregate(records_from_rows(rows))
    if args.summary:
        write_summary(summary, args.summary)
    for algo, s in summary.items():
        print(f"{algo:8s} valid={s['valid_count']}/{s['count']} "
              f"median={s['median']:.4f} mean={s['mean']:.4f}")


def cmd_sweep(args):
    events = read_events(args.events)
    values = [int(v) for v in args.values.split(",")]
    rows = []
    for v in values:
        depth, k = (v, args.k) if args.param == "depth" else (args.depth, v)
        cfg = _qaoa_config(args, depth=depth)
        for ev in events:
            row = qaoa_row(ev, k, cfg)
            row["algorithm"] = f"qaoa-{args.param}{v}"
            rows.append(row)
    write_results(rows, args.out)
    for algo, s in aggregate(records_from_rows(rows)).items():
        print(f"{algo:12s} median={s['median']:.4f} mean={s['mean']:.4f}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="jetcut", description="QAOA two-jet clustering toolkit")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write toy two-jet events as JSON lines")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n-particles", type=int, default=6)
    p.add_argument("--spread", type=float, default=0.3)
    p.add_argument("--emin", type=float, default=1.0)
    p.add_argument("--emax", type=float, default=20.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle", help="exact Max-Cut per event")
    p.add_argument("--events", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--dump-graph")
    p.add_argument("--out", type=argparse.FileType("w"), default=sys.stdout)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("qaoa", help="QAOA clustering per event")
    p.add_argument("--events", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--dump-graph")
    _add_qaoa_opts(p)
    p.set_defaults(func=cmd_qaoa)

    p = sub.add_parser("baseline", help="classical clustering per event")
    p.add_argument("--algo", choices=["kt", "kmeans"], required=True)
    p.add_argument("--events", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("compile", help="lower one event's optimized QAOA circuit to gates")
    p.add_argument("--events", required=True)
    p.add_argument("--event-id", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--coupling", default="all2all")
    p.add_argument("--format", choices=["text", "qasm"], default="text")
    p.add_argument("--out", required=True)
    _add_qaoa_opts(p)
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("evaluate", help="summarize result CSVs")
    p.add_argument("--results", nargs="+", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--hist")
    p.add_argument("--bins", type=int, default=60)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("bench", help="run several algorithms and compare angle sums")
    p.add_argument("--events", required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--algos", default="qaoa,kt,kmeans")
    p.add_argument("--out")
    p.add_argument("--summary")
    _add_qaoa_opts(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("sweep", help="scan QAOA depth or graph k")
    p.add_argument("--events", required=True)
    p.add_argument("--param", choices=["depth", "k"], required=True)
    p.add_argument("--values", required=True, help="comma separated, e.g. 1,3,5")
    p.add_argument("--k", type=int, default=6)
    p.add_argument("--out", required=True)
    _add_qaoa_opts(p)
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    args.func(args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
