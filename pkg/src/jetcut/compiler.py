"""Lowering of QAOA instances to native gates, SWAP routing, and a gate simulator.

Native gates are H, RX, RZ and CNOT; SWAP appears only after routing.
Rotations follow ``RX(t) = exp(-i t X / 2)`` and ``RZ(t) = exp(-i t Z / 2)``.

A weighted edge ``(a, b, w)`` in step ``j`` becomes
``CNOT(a, b) RZ(ZZ_ANGLE_SIGN * gamma_j * w)(b) CNOT(a, b)``.  Because
``CNOT RZ(t) CNOT = exp(-i t Z_a Z_b / 2)`` and the cut operator is
``(1 - Z_a Z_b) / 2`` per edge, the sign must be -1 for the circuit to
reproduce ``exp(-i gamma C)`` up to a global phase.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import networkx as nx
import numpy as np

from .graph import WeightedGraph
from .maxcut import QubitLimitError
from .qaoa import DEFAULT_MAX_QUBITS, QaoaParams

ZZ_ANGLE_SIGN = -1.0

SINGLE_QUBIT = {"H", "RX", "RZ"}
TWO_QUBIT = {"CNOT", "SWAP"}


@dataclass(frozen=True)
class Gate:
    kind: str
    qubits: tuple[int, ...]
    theta: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        if self.kind in SINGLE_QUBIT:
            if len(self.qubits) != 1:
                raise ValueError(f"{self.kind} takes one qubit")
        elif self.kind in TWO_QUBIT:
            if len(self.qubits) != 2 or self.qubits[0] == self.qubits[1]:
                raise ValueError(f"{self.kind} takes two distinct qubits")
        else:
            raise ValueError(f"unknown gate {self.kind!r}")
        if (self.kind in ("RX", "RZ")) != (self.theta is not None):
            raise ValueError(f"{self.kind}: rotation angle mismatch")

    def __str__(self):
        s = " ".join([self.kind, *map(str, self.qubits)])
        return s if self.theta is None else f"{s} {self.theta!r}"


@dataclass(frozen=True)
class GateCircuit:
    n: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        for gt in self.gates:
            if any(q >= self.n or q < 0 for q in gt.qubits):
                raise ValueError(f"gate {gt} out of range for {self.n} qubits")


@dataclass(frozen=True)
class CouplingMap:
    n: int
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        pairs = frozenset((min(a, b), max(a, b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not nx.is_connected(self.graph()):
            raise ValueError("coupling map is not connected")

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.pairs)
        return g

    def allows(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.pairs

    @classmethod
    def all_to_all(cls, n: int) -> CouplingMap:
        return cls(n, frozenset((a, b) for a in range(n) for b in range(a + 1, n)))

    @classmethod
    def line(cls, n: int) -> CouplingMap:
        return cls(n, frozenset((q, q + 1) for q in range(n - 1)))

    @classmethod
    def from_file(cls, path: str | Path, n: int | None = None) -> CouplingMap:
        pairs = []
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                if line.strip() and not line.lstrip().startswith("#"):
                    a, b = line.split()
                    pairs.append((int(a), int(b)))
        if n is None:
            n = 1 + max(max(p) for p in pairs)
        return cls(n, frozenset(pairs))


def lower(g: WeightedGraph, params: QaoaParams) -> GateCircuit:
    gates = [Gate("H", (q,)) for q in range(g.n)]
    for gamma, beta in zip(params.gammas, params.betas):
        for a, b, w in g.edges:
            gates.append(Gate("CNOT", (a, b)))
            gates.append(Gate("RZ", (b,), ZZ_ANGLE_SIGN * gamma * w))
            gates.append(Gate("CNOT", (a, b)))
        gates.extend(Gate("RX", (q,), 2.0 * beta) for q in range(g.n))
    return GateCircuit(g.n, tuple(gates))


@dataclass(frozen=True)
class RoutedCircuit:
    """Routed gates on physical qubits.

    ``layout[l]`` is the physical qubit holding logical qubit ``l`` at the
    end of the circuit; the initial layout is the identity.
    """

    circuit: GateCircuit
    layout: tuple[int, ...]
    swap_count: int


def route(c: GateCircuit, cmap: CouplingMap) -> RoutedCircuit:
    """Greedy routing: walk the first operand along a shortest path until adjacent."""
    if cmap.n < c.n:
        raise ValueError("coupling map has fewer qubits than the circuit")
    cg = cmap.graph()
    layout = list(range(cmap.n))        # logical -> physical
    where = list(range(cmap.n))         # physical -> logical
    out, swaps = [], 0
    for gt in c.gates:
        if len(gt.qubits) == 1:
            out.append(Gate(gt.kind, (layout[gt.qubits[0]],), gt.theta))
            continue
        la, lb = gt.qubits
        pa, pb = layout[la], layout[lb]
        if not cmap.allows(pa, pb):
            path = nx.shortest_path(cg, pa, pb)
            for u, v in zip(path[:-2], path[1:-1]):
                out.append(Gate("SWAP", (u, v)))
                swaps += 1
                lu, lv = where[u], where[v]
                where[u], where[v] = lv, lu
                layout[lu], layout[lv] = v, u
            pa, pb = layout[la], layout[lb]
        out.append(Gate(gt.kind, (pa, pb), gt.theta))
    return RoutedCircuit(GateCircuit(cmap.n, tuple(out)), tuple(layout[: c.n]), swaps)


# -- simulation --------------------------------------------------------------

def _rx(theta):
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]])


def _rz(theta):
    return np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)])


_H = np.array([[1, 1], [1, -1]]) / math.sqrt(2)


def _apply_1q(psi: np.ndarray, mat: np.ndarray, q: int) -> None:
    v = psi.reshape(-1, 2, 1 << q)
    a0 = v[:, 0, :].copy()
    a1 = v[:, 1, :].copy()
    v[:, 0, :] = mat[0, 0] * a0 + mat[0, 1] * a1
    v[:, 1, :] = mat[1, 0] * a0 + mat[1, 1] * a1


def simulate_gates(c: GateCircuit, max_qubits: int = DEFAULT_MAX_QUBITS) -> np.ndarray:
    """Apply the gates in order to ``|0...0>``."""
    if c.n > max_qubits:
        raise QubitLimitError(f"{c.n} qubits exceed max_qubits={max_qubits}")
    psi = np.zeros(1 << c.n, dtype=complex)
    psi[0] = 1.0
    idx = np.arange(psi.size)
    for gt in c.gates:
        if gt.kind == "H":
            _apply_1q(psi, _H, gt.qubits[0])
        elif gt.kind == "RX":
            _apply_1q(psi, _rx(gt.theta), gt.qubits[0])
        elif gt.kind == "RZ":
            _apply_1q(psi, _rz(gt.theta), gt.qubits[0])
        elif gt.kind == "CNOT":
            ctl, tgt = gt.qubits
            psi = psi[idx ^ (((idx >> ctl) & 1) << tgt)]
        else:  # SWAP
            a, b = gt.qubits
            differ = ((idx >> a) ^ (idx >> b)) & 1
            psi = psi[idx ^ ((differ << a) | (differ << b))]
    return psi


def to_logical_order(psi: np.ndarray, layout: tuple[int, ...]) -> np.ndarray:
    """Re-index a physical-qubit state so that bit ``l`` is logical qubit ``l``.

    Physical qubits without a logical owner must be in ``|0>``; they are dropped.
    """
    n = len(layout)
    z = np.arange(1 << n)
    phys = np.zeros_like(z)
    for l, p in enumerate(layout):
        phys |= ((z >> l) & 1) << p
    return psi[phys]


def fidelity(a: np.ndarray, b: np.ndarray) -> float:
    """``|<a|b>|``; insensitive to global phase."""
    return float(abs(np.vdot(a, b)))


@dataclass(frozen=True)
class CircuitStats:
    cnot_count: int = 0
    single_qubit_count: int = 0
    swap_count: int = 0
    depth: int = 0


def stats(c: GateCircuit) -> CircuitStats:
    """Gate counts and ASAP depth (gates sharing a qubit are ordered)."""
    level = [0] * c.n
    counts = {"CNOT": 0, "SWAP": 0, "1q": 0}
    for gt in c.gates:
        lv = 1 + max(level[q] for q in gt.qubits)
        for q in gt.qubits:
            level[q] = lv
        counts["1q" if gt.kind in SINGLE_QUBIT else gt.kind] += 1
    return CircuitStats(counts["CNOT"], counts["1q"], counts["SWAP"], max(level, default=0))


def to_text(c: GateCircuit) -> str:
    """One gate per line: ``GATE q0 [q1] [theta]``."""
    return "".join(f"{gt}\n" for gt in c.gates)


def from_text(text: str, n: int) -> GateCircuit:
    gates = []
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        kind = parts[0]
        if kind in ("RX", "RZ"):
            gates.append(Gate(kind, (int(parts[1]),), float(parts[2])))
        else:
            gates.append(Gate(kind, tuple(int(p) for p in parts[1:])))
    return GateCircuit(n, tuple(gates))


def to_qasm(c: GateCircuit) -> str:
    """OpenQASM 2.0 export (``q[i]`` is qubit ``i``)."""
    names = {"H": "h", "RX": "rx", "RZ": "rz", "CNOT": "cx", "SWAP": "swap"}
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{c.n}];"]
    for gt in c.gates:
        args = ",".join(f"q[{q}]" for q in gt.qubits)
        op = names[gt.kind] if gt.theta is None else f"{names[gt.kind]}({gt.theta!r})"
        lines.append(f"{op} {args};")
    return "\n".join(lines) + "\n"
