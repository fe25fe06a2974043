"""Angle-sum scoring of two-jet assignments and ensemble summaries."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .baselines import JetResult, jet_momenta
from .events import Event, angle_between_vectors
from .maxcut import Partition

INVALID_SUM = 2 * math.pi
DEFAULT_BINS = 60


@dataclass(frozen=True)
class MetricRecord:
    event_id: int
    algorithm: str
    angle1: float
    angle2: float
    sum: float
    valid: bool


def score(result: JetResult | Partition, event: Event, algorithm: str | None = None) -> MetricRecord:
    """Angles between the two jet axes and the truth quark axes.

    The jet/quark pairing is whichever of the two matchings gives the smaller
    sum.  A partition with an empty side scores ``valid=False`` with both
    angles set to pi (sum 2 pi).  A jet whose 3-momenta cancel has no
    direction and scores pi/2 against either axis.
    """
    if event.truth_axes is None or len(event.truth_axes) != 2:
        raise ValueError("scoring requires exactly two truth axes")
    if isinstance(result, JetResult):
        assignment, algorithm = result.assignment, algorithm or result.algorithm
    else:
        assignment = result
    algorithm = algorithm or "unknown"
    if assignment.n != event.n:
        raise ValueError("assignment size does not match the event")
    if len(set(assignment.bits)) < 2:
        return MetricRecord(event.event_id, algorithm, math.pi, math.pi, INVALID_SUM, False)

    j0, j1 = jet_momenta(event, assignment)
    t0, t1 = (np.asarray(a) for a in event.truth_axes)
    direct = (angle_between_vectors(j0[:3], t0), angle_between_vectors(j1[:3], t1))
    swapped = (angle_between_vectors(j0[:3], t1), angle_between_vectors(j1[:3], t0))
    a1, a2 = direct if sum(direct) <= sum(swapped) else swapped
    return MetricRecord(event.event_id, algorithm, a1, a2, a1 + a2, True)


def aggregate(records: Iterable[MetricRecord], bins: int = DEFAULT_BINS,
              hist_range: tuple[float, float] = (0.0, math.pi)) -> dict[str, dict]:
    """Per-algorithm count, valid count, mean/median/quartiles and histogram of the sum.

    Invalid records are counted but excluded from statistics; statistics are
    ``None`` when no valid record exists.  Valid sums above the histogram
    range land in ``overflow``.
    """
    records = list(records)
    if not records:
        raise ValueError("cannot aggregate an empty record set")
    by_algo: dict[str, list[MetricRecord]] = {}
    for r in records:
        by_algo.setdefault(r.algorithm, []).append(r)

    edges = np.linspace(hist_range[0], hist_range[1], bins + 1)
    out = {}
    for algo, recs in by_algo.items():
        sums = np.array([r.sum for r in recs if r.valid])
        counts, _ = np.histogram(sums, bins=edges)
        summary = {
            "count": len(recs),
            "valid_count": int(sums.size),
            "mean": None, "median": None, "q1": None, "q3": None,
            "hist_edges": edges.tolist(),
            "hist_counts": counts.astype(int).tolist(),
            "overflow": int(np.sum(sums > hist_range[1])),
        }
        if sums.size:
            q1, med, q3 = np.percentile(sums, [25, 50, 75])
            summary.update(mean=float(sums.mean()), median=float(med),
                           q1=float(q1), q3=float(q3))
        out[algo] = summary
    return out


# -- result files --------------------------------------------------------------

RESULT_FIELDS = [
    "algorithm", "event_id", "depth", "k", "expectation", "best_sample_value",
    "c_max", "best_sample", "eval_count", "angle1", "angle2", "sum", "valid",
]


def write_results(rows: Sequence[dict], path: str | Path) -> None:
    """CSV with :data:`RESULT_FIELDS`; absent fields are left empty."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.DictWriter(fh, fieldnames=RESULT_FIELDS)
        w.writeheader()
        for row in rows:
            w.writerow({k: ("" if row.get(k) is None else row.get(k)) for k in RESULT_FIELDS})


def read_results(path: str | Path) -> list[dict]:
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def records_from_rows(rows: Iterable[dict]) -> list[MetricRecord]:
    out = []
    for row in rows:
        valid = str(row["valid"]).strip().lower() in ("1", "true")
        out.append(MetricRecord(int(row["event_id"]), row["algorithm"], float(row["angle1"]),
                                float(row["angle2"]), float(row["sum"]), valid))
    return out


def record_fields(rec: MetricRecord) -> dict:
    d = asdict(rec)
    d["valid"] = int(rec.valid)
    return d


def write_summary(summary: dict, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(summary, fh, indent=2)


def write_histogram(summary: dict, path: str | Path) -> None:
    """Long-format CSV: ``algorithm,bin_low,bin_high,count``."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["algorithm", "bin_low", "bin_high", "count"])
        for algo, s in summary.items():
            edges = s["hist_edges"]
            for lo, hi, c in zip(edges[:-1], edges[1:], s["hist_counts"]):
                w.writerow([algo, lo, hi, c])
