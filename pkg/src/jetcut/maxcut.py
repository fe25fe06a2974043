"""Cut objective, diagonal cost spectrum, and the brute-force Max-Cut oracle.

Bit ordering is little-endian throughout: node/qubit ``i`` is bit ``i`` of a
basis index ``z``.  Each undirected edge contributes its weight once when its
endpoints fall on different sides.

All three routines accumulate cut edge weights sequentially in edge order, so
for a given partition they return bit-identical floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import WeightedGraph

ORACLE_MAX_NODES = 24
# 2**24 float64 entries = 128 MiB
SPECTRUM_MAX_QUBITS = 24


class QubitLimitError(ValueError):
    """Problem size exceeds a configured memory guard."""


@dataclass(frozen=True)
class Partition:
    """Two-sided assignment of nodes; ``bits[i]`` is the side of node ``i``."""

    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if not set(bits) <= {0, 1}:
            raise ValueError("partition bits must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_index(cls, z: int, n: int) -> Partition:
        return cls(tuple((z >> i) & 1 for i in range(n)))

    @classmethod
    def from_bitstring(cls, s: str) -> Partition:
        return cls(tuple(int(c) for c in s))

    @property
    def n(self) -> int:
        return len(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    @property
    def index(self) -> int:
        return sum(b << i for i, b in enumerate(self.bits))

    @property
    def bitstring(self) -> str:
        """Node 0 first."""
        return "".join(str(b) for b in self.bits)

    def complement(self) -> Partition:
        return Partition(tuple(1 - b for b in self.bits))

    def sides(self) -> tuple[list[int], list[int]]:
        return ([i for i, b in enumerate(self.bits) if b == 0],
                [i for i, b in enumerate(self.bits) if b == 1])


@dataclass(frozen=True)
class CutResult:
    best: Partition
    value: float
    optimum: bool = False


def cut_value(g: WeightedGraph, x: Partition | Sequence[int]) -> float:
    bits = np.asarray(x.bits if isinstance(x, Partition) else x, dtype=np.int8)
    if bits.shape != (g.n,):
        raise ValueError(f"partition has {bits.size} bits, graph has {g.n} nodes")
    i, j, w = g.arrays
    if w.size == 0:
        return 0.0
    cut = w * (bits[i] != bits[j])
    return float(np.cumsum(cut)[-1])


def bitstring(z: int, n: int) -> str:
    """Basis index as a node-0-first bitstring."""
    return "".join(str((z >> q) & 1) for q in range(n))


def cost_spectrum(g: WeightedGraph, max_qubits: int = SPECTRUM_MAX_QUBITS) -> np.ndarray:
    """Cut value of every basis state, indexed little-endian."""
    if g.n > max_qubits:
        raise QubitLimitError(
            f"cost spectrum for {g.n} qubits needs 2**{g.n} entries; limit is {max_qubits}")
    dim = 1 << g.n
    z = np.arange(dim, dtype=np.int64)
    spec = np.zeros(dim)
    tmp = np.empty(dim, dtype=np.int64)
    for i, j, w in g.edges:
        np.right_shift(z, i, out=tmp)
        tmp ^= z >> j
        tmp &= 1
        spec += w * tmp
    return spec


def brute_force_maxcut(g: WeightedGraph, max_nodes: int = ORACLE_MAX_NODES,
                       chunk: int = 1 << 16) -> CutResult:
    """Exact Max-Cut by enumerating the 2**(n-1) partitions with node 0 on side 0.

    Ties go to the lowest basis index.
    """
    n = g.n
    if n > max_nodes:
        raise QubitLimitError(
            f"brute force over {n} nodes exceeds the limit of {max_nodes}; use QAOA instead")
    if n == 0:
        return CutResult(Partition(()), 0.0, optimum=True)
    reps = 1 << (n - 1)
    shifts = np.arange(n - 1)
    best_val, best_z = -1.0, 0
    for start in range(0, reps, chunk):
        r = np.arange(start, min(start + chunk, reps), dtype=np.int64)
        # row k holds the bits of z = 2*r[k]: node 0 fixed to 0, nodes 1..n-1 from r
        bits = np.zeros((r.size, n), dtype=bool)
        bits[:, 1:] = (r[:, None] >> shifts) & 1
        vals = np.zeros(r.size)
        for i, j, w in g.edges:
            vals += w * (bits[:, i] != bits[:, j])
        k = int(np.argmax(vals))
        if vals[k] > best_val:
            best_val, best_z = float(vals[k]), int(2 * r[k])
    best = Partition.from_index(best_z, n)
    return CutResult(best, cut_value(g, best), optimum=True)
