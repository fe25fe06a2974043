"""Statevector QAOA for weighted Max-Cut.

Conventions
-----------
* The initial state is ``|+>^n``; the mixer is ``exp(-i beta X)`` on every
  qubit (an ``RX(2 beta)``); the cost layer is ``exp(-i gamma C)`` where
  ``C`` is the diagonal cut-value operator.
* Within step ``j`` the cost layer acts first, then the mixer.
* The optimizer *maximizes* ``<C>``; the maximal eigenstate of ``C`` is the
  maximum cut.
* Statevectors are plain complex128 arrays of length ``2**n`` indexed
  little-endian (qubit ``q`` is bit ``q``).
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .graph import WeightedGraph
from .maxcut import Partition, QubitLimitError, bitstring, cost_spectrum, cut_value

log = logging.getLogger(__name__)

DEFAULT_MAX_QUBITS = 24


class InitStrategy(str, enum.Enum):
    """How deeper schedules are seeded.

    ``INTERPOLATE``
        Depth-1 grid search, then each depth ``p + 1`` starts from the
        interpolated depth-``p`` optimum, falling back to zero-padding when
        interpolation scores worse.
    ``ZERO_PAD``
        Depth-1 grid search, then each deeper schedule appends ``gamma =
        beta = 0`` to the previous optimum.
    ``GRID``
        Depth-1 grid search only; the target depth is optimized once from
        the grid point split evenly over ``p`` layers.
    """

    GRID = "grid"
    INTERPOLATE = "interpolate"
    ZERO_PAD = "zero-pad"


@dataclass(frozen=True)
class QaoaParams:
    gammas: tuple[float, ...]
    betas: tuple[float, ...]

    def __post_init__(self):
        g = tuple(float(v) for v in self.gammas)
        b = tuple(float(v) for v in self.betas)
        if len(g) != len(b):
            raise ValueError("gammas and betas must have equal length")
        if not all(math.isfinite(v) for v in g + b):
            raise ValueError("QAOA parameters must be finite")
        object.__setattr__(self, "gammas", g)
        object.__setattr__(self, "betas", b)

    @property
    def depth(self) -> int:
        return len(self.gammas)

    @classmethod
    def from_vector(cls, x) -> QaoaParams:
        x = np.asarray(x, dtype=float)
        p = x.size // 2
        return cls(tuple(x[:p]), tuple(x[p:]))

    def to_vector(self) -> np.ndarray:
        return np.array(self.gammas + self.betas)


@dataclass(frozen=True)
class QaoaConfig:
    depth: int = 1
    shots: int = 1024
    max_qubits: int = DEFAULT_MAX_QUBITS
    max_evals: int = 200
    tol: float = 1e-6
    seed: int = 0
    init: InitStrategy = InitStrategy.INTERPOLATE
    grid_size: int = 8
    rhobeg: float = 0.2

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("depth must be >= 1")
        if self.shots < 1:
            raise ValueError("shots must be >= 1")
        object.__setattr__(self, "init", InitStrategy(self.init))


@dataclass
class QaoaOutcome:
    params: QaoaParams
    expectation: float
    best_sample: Partition
    best_sample_value: float
    histogram: dict[str, int]
    eval_count: int
    depth_expectations: list[float] = field(default_factory=list)


def _guard(n: int, max_qubits: int) -> None:
    if n > max_qubits:
        raise QubitLimitError(
            f"{n} qubits exceed max_qubits={max_qubits} "
            f"(a statevector needs 2**{n} complex amplitudes)")


def prepare_plus_state(n: int, max_qubits: int = DEFAULT_MAX_QUBITS) -> np.ndarray:
    _guard(n, max_qubits)
    dim = 1 << n
    return np.full(dim, 1.0 / math.sqrt(dim), dtype=complex)


def apply_cost_layer(psi: np.ndarray, spectrum: np.ndarray, gamma: float) -> np.ndarray:
    if psi.shape != spectrum.shape:
        raise ValueError("statevector and spectrum lengths differ")
    return psi * np.exp(-1j * gamma * spectrum)


def apply_mixer_layer(psi: np.ndarray, beta: float) -> np.ndarray:
    n = psi.size.bit_length() - 1
    c, s = math.cos(beta), -1j * math.sin(beta)
    out = psi.copy()
    for q in range(n):
        v = out.reshape(-1, 2, 1 << q)
        a0 = v[:, 0, :].copy()
        a1 = v[:, 1, :]
        v[:, 0, :] = c * a0 + s * a1
        v[:, 1, :] = s * a0 + c * a1
    return out


def expectation(psi: np.ndarray, spectrum: np.ndarray) -> float:
    if psi.shape != spectrum.shape:
        raise ValueError("statevector and spectrum lengths differ")
    probs = psi.real ** 2 + psi.imag ** 2
    return float(probs @ spectrum)


def evolve(spectrum: np.ndarray, params: QaoaParams) -> np.ndarray:
    """QAOA state for a precomputed cost spectrum."""
    psi = np.full(spectrum.size, 1.0 / math.sqrt(spectrum.size), dtype=complex)
    for gamma, beta in zip(params.gammas, params.betas):
        psi = apply_cost_layer(psi, spectrum, gamma)
        psi = apply_mixer_layer(psi, beta)
    return psi


def run_circuit(g: WeightedGraph, params: QaoaParams,
                max_qubits: int = DEFAULT_MAX_QUBITS) -> np.ndarray:
    _guard(g.n, max_qubits)
    return evolve(cost_spectrum(g, max_qubits), params)


def sample(psi: np.ndarray, shots: int, seed: int | None = None) -> dict[str, int]:
    """Draw ``shots`` computational-basis measurements; keys are node-0-first bitstrings."""
    if shots < 1:
        raise ValueError("shots must be >= 1")
    n = psi.size.bit_length() - 1
    probs = psi.real ** 2 + psi.imag ** 2
    probs = probs / probs.sum()
    counts = np.random.default_rng(seed).multinomial(shots, probs)
    return {bitstring(int(z), n): int(counts[z]) for z in np.flatnonzero(counts)}


def interpolate_schedule(values: np.ndarray) -> np.ndarray:
    """Resample a depth-p schedule onto p + 1 points.

    Values sit at positions (j - 1/2)/p and are linearly interpolated to
    (j - 1/2)/(p + 1), clamped at the ends.
    """
    p = len(values)
    src = (np.arange(p) + 0.5) / p
    dst = (np.arange(p + 1) + 0.5) / (p + 1)
    return np.interp(dst, src, values)


def interpolate_params(params: QaoaParams) -> QaoaParams:
    return QaoaParams(tuple(interpolate_schedule(np.array(params.gammas))),
                      tuple(interpolate_schedule(np.array(params.betas))))


def zero_pad_params(params: QaoaParams) -> QaoaParams:
    return QaoaParams(params.gammas + (0.0,), params.betas + (0.0,))


class _Objective:
    """Counts evaluations and remembers the best point seen."""

    def __init__(self, spectrum: np.ndarray):
        self.spectrum = spectrum
        self.count = 0
        self.best_x = None
        self.best_val = -np.inf

    def value(self, x) -> float:
        self.count += 1
        val = expectation(evolve(self.spectrum, QaoaParams.from_vector(x)), self.spectrum)
        if val > self.best_val:
            self.best_val, self.best_x = val, np.array(x, dtype=float)
        return val

    def reset_best(self, x, val):
        self.best_x, self.best_val = np.array(x, dtype=float), val


def grid_search(obj: _Objective, w_max: float, size: int = 8) -> tuple[QaoaParams, float]:
    """Depth-1 scan over gamma in (0, pi/w_max] and beta in (0, pi/2]."""
    g_top = math.pi / w_max if w_max > 0 else math.pi
    best = (None, -np.inf)
    for a in range(1, size + 1):
        for b in range(1, size + 1):
            x = (a * g_top / size, b * (math.pi / 2) / size)
            val = obj.value(x)
            if val > best[1]:
                best = (x, val)
    return QaoaParams.from_vector(best[0]), best[1]


def local_optimize(obj: _Objective, start: QaoaParams, start_val: float,
                   cfg: QaoaConfig) -> tuple[QaoaParams, float]:
    """COBYLA refinement; never returns anything worse than ``start``."""
    obj.reset_best(start.to_vector(), start_val)
    budget = max(cfg.max_evals - 1, 1)
    minimize(lambda x: -obj.value(x), start.to_vector(), method="COBYLA",
             options={"maxiter": budget, "rhobeg": cfg.rhobeg, "tol": cfg.tol})
    return QaoaParams.from_vector(obj.best_x), obj.best_val


def optimize_schedule(spectrum: np.ndarray, w_max: float,
                      cfg: QaoaConfig) -> tuple[list[tuple[QaoaParams, float]], int]:
    """Optimized ``(params, <C>)`` for every depth 1..cfg.depth, plus evaluation count."""
    obj = _Objective(spectrum)
    seed_params, seed_val = grid_search(obj, w_max, cfg.grid_size)

    if cfg.init is InitStrategy.GRID:
        p = cfg.depth
        params, val = seed_params, seed_val
        if p > 1:
            params = QaoaParams(tuple(g / p for g in seed_params.gammas) * p,
                                tuple(b / p for b in seed_params.betas) * p)
            val = obj.value(params.to_vector())
        best = local_optimize(obj, params, val, cfg)
        return [best], obj.count

    results = [local_optimize(obj, seed_params, seed_val, cfg)]
    for _ in range(1, cfg.depth):
        prev, prev_val = results[-1]
        padded = zero_pad_params(prev)
        start, start_val = padded, prev_val
        if cfg.init is InitStrategy.INTERPOLATE:
            interp = interpolate_params(prev)
            interp_val = obj.value(interp.to_vector())
            if interp_val >= prev_val:
                start, start_val = interp, interp_val
        results.append(local_optimize(obj, start, start_val, cfg))
    return results, obj.count


def best_sample_from(histogram: dict[str, int], spectrum: np.ndarray) -> Partition:
    """Highest-cut sampled bitstring; ties go to the lowest basis index."""
    best_z, best_val = None, -np.inf
    for key in histogram:
        z = Partition.from_bitstring(key).index
        val = spectrum[z]
        if val > best_val or (val == best_val and z < best_z):
            best_z, best_val = z, val
    return Partition.from_index(best_z, spectrum.size.bit_length() - 1)


def optimize(g: WeightedGraph, cfg: QaoaConfig | None = None) -> QaoaOutcome:
    cfg = cfg or QaoaConfig()
    _guard(g.n, cfg.max_qubits)
    spectrum = cost_spectrum(g, cfg.max_qubits)
    per_depth, evals = optimize_schedule(spectrum, g.max_weight, cfg)
    params, value = per_depth[-1]
    psi = evolve(spectrum, params)
    hist = sample(psi, cfg.shots, cfg.seed)
    best = best_sample_from(hist, spectrum)
    log.debug("n=%d depth=%d <C>=%.6f evals=%d", g.n, cfg.depth, value, evals)
    return QaoaOutcome(
        params=params,
        expectation=expectation(psi, spectrum),
        best_sample=best,
        best_sample_value=cut_value(g, best),
        histogram=hist,
        eval_count=evals,
        depth_expectations=[v for _, v in per_depth],
    )
