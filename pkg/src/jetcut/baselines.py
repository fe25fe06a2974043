"""Classical two-jet baselines: exclusive e+e- k_t and angular k-Means (K = 2)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .events import Event, angle_between_vectors
from .maxcut import Partition

KMEANS_MAX_ITER = 100


@dataclass(frozen=True)
class JetResult:
    assignment: Partition
    jet_momenta: tuple[np.ndarray, np.ndarray]
    algorithm: str
    # k_t: pseudojet 4-momenta after each merge; k-Means: objective after each iteration
    history: tuple = ()
    iterations: int = 0


def jet_momenta(event: Event, assignment: Partition) -> tuple[np.ndarray, np.ndarray]:
    p4 = event.four_momenta()
    bits = np.array(assignment.bits)
    return p4[bits == 0].sum(axis=0), p4[bits == 1].sum(axis=0)


def kt_distance(e_i: float, e_j: float, cos_theta: float) -> float:
    """``2 min(E_i^2, E_j^2) (1 - cos theta_ij)``."""
    return 2.0 * min(e_i * e_i, e_j * e_j) * (1.0 - cos_theta)


def _cos_angle(a: np.ndarray, b: np.ndarray) -> float:
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0 or nb == 0:
        return 0.0
    return float(np.clip(a @ b / (na * nb), -1.0, 1.0))


def kt_cluster(event: Event) -> JetResult:
    """Exclusive e+e- k_t clustering down to two jets, E-scheme recombination.

    The merged pseudojet replaces the lower-indexed partner; the other is
    removed. Ties in d_ij go to the lexicographically smallest (i, j).
    """
    if event.n < 2:
        raise ValueError("k_t clustering needs at least 2 particles")
    jets = [p.copy() for p in event.four_momenta()]
    members = [[i] for i in range(event.n)]
    history = []
    while len(jets) > 2:
        best, best_d = None, np.inf
        for i in range(len(jets)):
            for j in range(i + 1, len(jets)):
                d = kt_distance(jets[i][3], jets[j][3], _cos_angle(jets[i][:3], jets[j][:3]))
                if d < best_d:
                    best, best_d = (i, j), d
        i, j = best
        jets[i] = jets[i] + jets[j]
        members[i] = members[i] + members[j]
        del jets[j], members[j]
        history.append(np.array(jets))

    bits = [0] * event.n
    for idx in members[1]:
        bits[idx] = 1
    assignment = Partition(tuple(bits))
    return JetResult(assignment, jet_momenta(event, assignment), "kt", tuple(history),
                     iterations=len(history))


def _farthest_pair(dirs: np.ndarray) -> tuple[int, int]:
    best, best_a = (0, 1), -1.0
    for i in range(len(dirs)):
        for j in range(i + 1, len(dirs)):
            a = angle_between_vectors(dirs[i], dirs[j])
            if a > best_a:
                best, best_a = (i, j), a
    return best


def _angles_to(dirs: np.ndarray, c: np.ndarray) -> np.ndarray:
    return np.array([angle_between_vectors(d, c) for d in dirs])


def _centroid(dirs: np.ndarray) -> np.ndarray:
    s = dirs.sum(axis=0)
    norm = np.linalg.norm(s)
    return s / norm if norm > 0 else dirs[0].copy()


def _sq_cost(dirs: np.ndarray, c: np.ndarray) -> float:
    return float(np.sum(_angles_to(dirs, c) ** 2))


def _descend(dirs: np.ndarray, c: np.ndarray, steps: int = 50) -> np.ndarray:
    """Riemannian gradient descent on the sum of squared angles, from ``c``."""
    cost = _sq_cost(dirs, c)
    for _ in range(steps):
        # mean of log maps at c
        g = np.zeros(3)
        for x in dirs:
            th = angle_between_vectors(c, x)
            if th > 1e-15:
                g += (x - np.cos(th) * c) * (th / np.sin(th))
        g /= len(dirs)
        t = np.linalg.norm(g)
        if t < 1e-14:
            break
        u = g / t
        while t > 1e-14:
            trial = np.cos(t) * c + np.sin(t) * u
            trial /= np.linalg.norm(trial)
            tc = _sq_cost(dirs, trial)
            if tc < cost:
                c, cost = trial, tc
                break
            t /= 2
        else:
            break
    return c


def _update_centroid(dirs: np.ndarray, current: np.ndarray) -> np.ndarray:
    """Normalized vector sum, unless it would raise the cluster's squared-angle cost.

    On wide clusters the normalized sum is not the minimizer of the squared
    angles; in that case the update descends from the current centroid instead.
    """
    cand = _centroid(dirs)
    if _sq_cost(dirs, cand) <= _sq_cost(dirs, current):
        return cand
    return _descend(dirs, current)


def kmeans_objective(dirs: np.ndarray, labels: np.ndarray, centroids: np.ndarray) -> float:
    """Sum of squared angles between points and their assigned centroids."""
    return float(sum(angle_between_vectors(d, centroids[l]) ** 2 for d, l in zip(dirs, labels)))


def kmeans_cluster(event: Event, max_iter: int = KMEANS_MAX_ITER) -> JetResult:
    """Two-cluster k-Means on particle directions with angular distance.

    Centroids start on the widest-angle particle pair and are updated as the
    normalized sum of member directions (see :func:`_update_centroid`).
    Iteration stops when assignments repeat or after ``max_iter`` updates.
    """
    if event.n < 2:
        raise ValueError("k-Means clustering needs at least 2 particles")
    dirs = event.directions()
    i0, j0 = _farthest_pair(dirs)
    centroids = np.array([dirs[i0], dirs[j0]])
    labels = None
    history = []
    updates = 0
    for _ in range(max_iter):
        dist = np.stack([_angles_to(dirs, c) for c in centroids], axis=1)
        new = (dist[:, 1] < dist[:, 0]).astype(int)
        for k in (0, 1):
            if not np.any(new == k):
                far = int(np.argmax(dist[:, 1 - k]))
                new[far] = k
        history.append(kmeans_objective(dirs, new, centroids))
        if labels is not None and np.array_equal(new, labels):
            break
        labels = new
        centroids = np.array([_update_centroid(dirs[labels == k], centroids[k]) for k in (0, 1)])
        updates += 1
        history.append(kmeans_objective(dirs, labels, centroids))
    assignment = Partition(tuple(int(l) for l in labels))
    return JetResult(assignment, jet_momenta(event, assignment), "kmeans", tuple(history),
                     iterations=updates)
