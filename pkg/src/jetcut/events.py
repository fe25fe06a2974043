"""Particle and event records, the toy two-jet generator, and JSON-lines I/O."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .rng import SplitMix64


class EventFormatError(ValueError):
    """A record in an event file could not be parsed or failed validation."""


@dataclass(frozen=True)
class Particle:
    px: float
    py: float
    pz: float
    e: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.px, self.py, self.pz, self.e)):
            raise ValueError("particle components must be finite")
        if not self.e > 0:
            raise ValueError(f"particle energy must be positive, got e={self.e}")
        p = self.p_abs
        if not p > 0:
            raise ValueError("particle momentum must be non-zero")
        if self.e < p - 1e-6 * self.e:
            raise ValueError(f"superluminal particle: e={self.e} < |p|={p}")

    @property
    def p_abs(self) -> float:
        return math.sqrt(self.px * self.px + self.py * self.py + self.pz * self.pz)

    @property
    def momentum(self) -> np.ndarray:
        return np.array([self.px, self.py, self.pz])

    @property
    def four_vector(self) -> np.ndarray:
        """``[px, py, pz, e]``."""
        return np.array([self.px, self.py, self.pz, self.e])


def direction(p: Particle) -> np.ndarray:
    """Unit vector along the particle's 3-momentum."""
    return p.momentum / p.p_abs


def angle_between_vectors(a: np.ndarray, b: np.ndarray) -> float:
    """Opening angle of two 3-vectors in [0, pi].

    Computed as atan2(|a x b|, a . b), which equals arccos of the clamped
    normalized dot product but keeps full precision near 0 and pi.  A zero
    vector yields pi/2.
    """
    cross = np.cross(a, b)
    return math.atan2(math.sqrt(float(cross @ cross)), float(np.dot(a, b)))


def angle_between(a: Particle, b: Particle) -> float:
    return angle_between_vectors(direction(a), direction(b))


def _check_unit(v, what: str) -> tuple[float, float, float]:
    if len(v) != 3:
        raise ValueError(f"{what} must have 3 components")
    v = tuple(float(c) for c in v)
    if abs(math.sqrt(sum(c * c for c in v)) - 1.0) > 1e-9:
        raise ValueError(f"{what} is not unit-norm: {v}")
    return v


@dataclass(frozen=True)
class Event:
    """An ordered set of particles plus the two truth quark directions.

    ``labels`` optionally records which truth axis (0 or 1) the generator
    attached each particle to; it is informational and never used by the
    clustering algorithms.
    """

    particles: tuple[Particle, ...]
    truth_axes: tuple[tuple[float, float, float], tuple[float, float, float]]
    event_id: int = 0
    labels: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "particles", tuple(self.particles))
        if len(self.particles) < 2:
            raise ValueError("an event needs at least 2 particles")
        if self.truth_axes is None or len(self.truth_axes) != 2:
            raise ValueError("an event needs exactly 2 truth axes")
        axes = tuple(_check_unit(a, f"truth axis {i}") for i, a in enumerate(self.truth_axes))
        object.__setattr__(self, "truth_axes", axes)
        if self.labels is not None:
            labels = tuple(int(l) for l in self.labels)
            if len(labels) != len(self.particles) or not set(labels) <= {0, 1}:
                raise ValueError("labels must assign every particle to axis 0 or 1")
            object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.particles)

    @property
    def n(self) -> int:
        return len(self.particles)

    def four_momenta(self) -> np.ndarray:
        """(n, 4) array of ``[px, py, pz, e]`` rows."""
        return np.array([p.four_vector for p in self.particles])

    def directions(self) -> np.ndarray:
        """(n, 3) array of unit directions."""
        return np.array([direction(p) for p in self.particles])

    def truth_array(self) -> np.ndarray:
        return np.array(self.truth_axes)


@dataclass(frozen=True)
class GeneratorConfig:
    n_particles: int = 6
    angular_spread: float = 0.3
    energy_range: tuple[float, float] = (1.0, 20.0)
    seed: int = 0

    def __post_init__(self):
        if self.n_particles < 2:
            raise ValueError("n_particles must be >= 2")
        # zero spread is accepted: it gives particles exactly on the axes
        if not 0 <= self.angular_spread < math.pi / 2:
            raise ValueError("angular_spread must lie in [0, pi/2)")
        lo, hi = self.energy_range
        if not 0 < lo <= hi:
            raise ValueError("energy_range must satisfy 0 < min <= max")


def _orthonormal_frame(axis: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    helper = np.array([1.0, 0.0, 0.0]) if abs(axis[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = np.cross(axis, helper)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(axis, e1)
    return e1, e2


def generate_two_jet_event(cfg: GeneratorConfig, event_id: int = 0) -> Event:
    """Draw one toy back-to-back two-jet event.

    Every random number comes from :class:`~jetcut.rng.SplitMix64` seeded with
    ``cfg.seed``, consumed in this order: the jet axis (cos theta, phi), then
    per particle its axis bit, cone cos theta, cone azimuth and energy.  If
    all particles land on one axis the last one is moved to the other.
    """
    rng = SplitMix64(cfg.seed)
    cos_t = 2.0 * rng.random() - 1.0
    phi = 2.0 * math.pi * rng.random()
    sin_t = math.sqrt(max(0.0, 1.0 - cos_t * cos_t))
    axis = np.array([sin_t * math.cos(phi), sin_t * math.sin(phi), cos_t])
    axis /= np.linalg.norm(axis)
    axes = (axis, -axis)

    cos_spread = math.cos(cfg.angular_spread)
    lo, hi = cfg.energy_range
    draws = []
    for _ in range(cfg.n_particles):
        label = rng.bit()
        cos_c = 1.0 - rng.random() * (1.0 - cos_spread)
        azim = 2.0 * math.pi * rng.random()
        energy = rng.uniform(lo, hi)
        draws.append([label, cos_c, azim, energy])
    labels = [d[0] for d in draws]
    if len(set(labels)) == 1:
        draws[-1][0] = 1 - labels[-1]

    particles = []
    for label, cos_c, azim, energy in draws:
        u = axes[label]
        e1, e2 = _orthonormal_frame(u)
        sin_c = math.sqrt(max(0.0, 1.0 - cos_c * cos_c))
        d = cos_c * u + sin_c * (math.cos(azim) * e1 + math.sin(azim) * e2)
        d /= np.linalg.norm(d)
        p = energy * d
        particles.append(Particle(float(p[0]), float(p[1]), float(p[2]), float(energy)))

    return Event(
        particles=tuple(particles),
        truth_axes=(tuple(axes[0]), tuple(axes[1])),
        event_id=event_id,
        labels=tuple(d[0] for d in draws),
    )


def generate_events(cfg: GeneratorConfig, count: int) -> list[Event]:
    """Event ``i`` is generated with seed ``cfg.seed + i`` and id ``i``."""
    out = []
    for i in range(count):
        sub = GeneratorConfig(cfg.n_particles, cfg.angular_spread, cfg.energy_range, cfg.seed + i)
        out.append(generate_two_jet_event(sub, event_id=i))
    return out


# -- JSON-lines I/O ---------------------------------------------------------

def event_to_dict(ev: Event) -> dict:
    d = {
        "id": ev.event_id,
        "particles": [[p.px, p.py, p.pz, p.e] for p in ev.particles],
        "truth_axes": [list(a) for a in ev.truth_axes],
    }
    if ev.labels is not None:
        d["labels"] = list(ev.labels)
    return d


def _parse_record(rec, lineno: int) -> Event:
    def fail(fieldname, msg):
        raise EventFormatError(f"line {lineno}: field '{fieldname}': {msg}")

    if not isinstance(rec, dict):
        fail("<record>", "expected a JSON object")
    if "id" not in rec:
        fail("id", "missing")
    if not isinstance(rec["id"], int):
        fail("id", "must be an integer")
    if "truth_axes" not in rec or rec["truth_axes"] is None:
        fail("truth_axes", "missing (evaluation requires truth)")
    if "particles" not in rec or not isinstance(rec["particles"], list):
        fail("particles", "missing or not a list")

    particles = []
    for k, row in enumerate(rec["particles"]):
        if not isinstance(row, list) or len(row) != 4:
            fail(f"particles[{k}]", "expected [px, py, pz, e]")
        try:
            particles.append(Particle(*(float(v) for v in row)))
        except (TypeError, ValueError) as exc:
            fail(f"particles[{k}]", str(exc))
    try:
        return Event(tuple(particles), tuple(rec["truth_axes"]), rec["id"], rec.get("labels"))
    except (TypeError, ValueError) as exc:
        msg = str(exc)
        fieldname = "truth_axes" if "axis" in msg or "axes" in msg else (
            "labels" if "labels" in msg else "particles")
        fail(fieldname, msg)


def read_events(path: str | Path) -> list[Event]:
    events = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise EventFormatError(f"line {lineno}: field '<json>': {exc.msg}") from exc
            events.append(_parse_record(rec, lineno))
    return events


def write_events(events: Iterable[Event], path: str | Path) -> None:
    # json writes floats with repr(), i.e. shortest round-tripping digits
    with open(path, "w", encoding="utf-8") as fh:
        for ev in events:
            fh.write(json.dumps(event_to_dict(ev)) + "\n")


def rotate_event(ev: Event, rot: np.ndarray) -> Event:
    """Apply a 3x3 rotation to every particle momentum and truth axis."""
    particles = []
    for p in ev.particles:
        q = rot @ p.momentum
        particles.append(Particle(float(q[0]), float(q[1]), float(q[2]), p.e))
    axes = [rot @ np.asarray(a) for a in ev.truth_axes]
    axes = [tuple(a / np.linalg.norm(a)) for a in axes]
    return Event(tuple(particles), tuple(axes), ev.event_id, ev.labels)


def permute_event(ev: Event, order: Sequence[int]) -> Event:
    labels = None if ev.labels is None else tuple(ev.labels[i] for i in order)
    return Event(tuple(ev.particles[i] for i in order), ev.truth_axes, ev.event_id, labels)
