"""Per-event runners that produce result rows for the CSV schema."""

from __future__ import annotations

import numpy as np

from .baselines import kmeans_cluster, kt_cluster
from .evaluation import record_fields, score
from .events import Event
from .graph import build_graph
from .maxcut import ORACLE_MAX_NODES, Partition, brute_force_maxcut
from .qaoa import QaoaConfig, optimize

ORACLE_ROW_CAP = 20


def qaoa_row(event: Event, k: int, cfg: QaoaConfig, oracle_cap: int = ORACLE_ROW_CAP) -> dict:
    g = build_graph(event, k)
    out = optimize(g, cfg)
    c_max = brute_force_maxcut(g).value if g.n <= min(oracle_cap, ORACLE_MAX_NODES) else None
    row = {
        "event_id": event.event_id, "depth": cfg.depth, "k": k,
        "expectation": out.expectation, "best_sample_value": out.best_sample_value,
        "c_max": c_max, "best_sample": out.best_sample.bitstring, "eval_count": out.eval_count,
    }
    row.update(record_fields(score(out.best_sample, event, "qaoa")))
    return row


def baseline_row(event: Event, algo: str) -> dict:
    if algo == "kt":
        res = kt_cluster(event)
    elif algo == "kmeans":
        res = kmeans_cluster(event)
    else:
        raise ValueError(f"unknown baseline {algo!r}")
    row = {"event_id": event.event_id, "best_sample": res.assignment.bitstring}
    row.update(record_fields(score(res, event)))
    return row


def random_row(event: Event, rng: np.random.Generator) -> dict:
    """Uniform random partition; a no-skill control for the metric."""
    part = Partition(tuple(rng.integers(0, 2, event.n)))
    row = {"event_id": event.event_id, "best_sample": part.bitstring}
    row.update(record_fields(score(part, event, "random")))
    return row
