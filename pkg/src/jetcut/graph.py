"""Event to angle-weighted graph mapping with per-node top-k edge retention."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from .events import Event, angle_between_vectors

# pairs closer than this are treated as coincident and never become edges
ZERO_ANGLE = 1e-12


class DegenerateEdgeWarning(UserWarning):
    pass


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected graph on ``n`` nodes; ``edges`` holds ``(i, j, w)`` with i < j."""

    n: int
    edges: tuple[tuple[int, int, float], ...]

    def __post_init__(self):
        edges = tuple((int(i), int(j), float(w)) for i, j, w in self.edges)
        seen = set()
        for i, j, w in edges:
            if not 0 <= i < j < self.n:
                raise ValueError(f"bad edge ({i}, {j}) for n={self.n}")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            if not 0 < w <= np.pi + 1e-12:
                raise ValueError(f"edge weight {w} outside (0, pi]")
            seen.add((i, j))
        object.__setattr__(self, "edges", edges)

    @cached_property
    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Edge endpoints and weights as ``(i, j, w)`` arrays in edge order."""
        if not self.edges:
            return np.zeros(0, int), np.zeros(0, int), np.zeros(0)
        i, j, w = zip(*self.edges)
        return np.array(i), np.array(j), np.array(w, dtype=float)

    @property
    def total_weight(self) -> float:
        return float(sum(w for _, _, w in self.edges))

    @property
    def max_weight(self) -> float:
        return max((w for _, _, w in self.edges), default=0.0)

    def edge_set(self) -> set[tuple[int, int]]:
        return {(i, j) for i, j, _ in self.edges}

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for i, j, _ in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg


def angle_matrix(event: Event) -> np.ndarray:
    dirs = event.directions()
    n = len(dirs)
    out = np.zeros((n, n))
    for a in range(n):
        for b in range(a + 1, n):
            out[a, b] = out[b, a] = angle_between_vectors(dirs[a], dirs[b])
    return out


def top_k_partners(angles: np.ndarray, node: int, k: int) -> list[int]:
    """The ``k`` partners of ``node`` with the largest angles.

    Ties go to the smaller partner index; coincident partners are skipped.
    """
    n = len(angles)
    cands = [j for j in range(n) if j != node and angles[node, j] > ZERO_ANGLE]
    cands.sort(key=lambda j: (-angles[node, j], j))
    return cands[:k]


def build_graph(event: Event, k: int) -> WeightedGraph:
    """Keep, for every node, its ``k`` widest-angle edges (union over endpoints)."""
    n = event.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must satisfy 1 <= k <= n-1 = {n - 1}, got {k}")
    angles = angle_matrix(event)
    iu = np.triu_indices(n, 1)
    n_degenerate = int(np.sum(angles[iu] <= ZERO_ANGLE))
    if n_degenerate:
        warnings.warn(
            f"event {event.event_id}: {n_degenerate} coincident particle pair(s) excluded",
            DegenerateEdgeWarning,
            stacklevel=2,
        )
    keep = set()
    for a in range(n):
        for b in top_k_partners(angles, a, k):
            keep.add((min(a, b), max(a, b)))
    edges = tuple((i, j, float(angles[i, j])) for i, j in sorted(keep))
    return WeightedGraph(n, edges)


def complete_graph(event: Event) -> WeightedGraph:
    return build_graph(event, event.n - 1)


def dump_graph(g: WeightedGraph, path: str | Path) -> None:
    """Write one ``i j w`` line per edge."""
    with open(path, "w", encoding="utf-8") as fh:
        for i, j, w in g.edges:
            fh.write(f"{i} {j} {w!r}\n")


def load_graph(path: str | Path, n: int | None = None) -> WeightedGraph:
    edges = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                i, j, w = line.split()
                edges.append((int(i), int(j), float(w)))
    if n is None:
        n = 1 + max((j for _, j, _ in edges), default=-1)
    return WeightedGraph(n, tuple(edges))
