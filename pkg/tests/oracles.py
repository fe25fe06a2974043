"""Independent reference implementations used only by the tests."""

import itertools
import math

import numpy as np
from scipy.linalg import expm

I2 = np.eye(2)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Z = np.diag([1.0, -1.0]).astype(complex)


def op_on(single, q, n):
    """Kronecker embedding of a 1-qubit operator; qubit q is bit q (little-endian)."""
    out = np.array([[1.0]], dtype=complex)
    for k in reversed(range(n)):
        out = np.kron(out, single if k == q else I2)
    return out


def dense_cost_hamiltonian(n, edges):
    """0.5 * sum w (I - Z_i Z_j) as a dense matrix."""
    dim = 2 ** n
    h = np.zeros((dim, dim), dtype=complex)
    for i, j, w in edges:
        h += 0.5 * w * (np.eye(dim) - op_on(Z, i, n) @ op_on(Z, j, n))
    return h


def dense_qaoa_state(n, edges, gammas, betas):
    hc = dense_cost_hamiltonian(n, edges)
    hm = sum(op_on(X, q, n) for q in range(n)) if n else np.zeros((1, 1))
    psi = np.ones(2 ** n, dtype=complex) / math.sqrt(2 ** n)
    for g, b in zip(gammas, betas):
        psi = expm(-1j * g * hc) @ psi
        psi = expm(-1j * b * hm) @ psi
    return psi


def enumerate_cut(n, edges, bits):
    return sum(w for i, j, w in edges if bits[i] != bits[j])


def exhaustive_maxcut(n, edges):
    return max(enumerate_cut(n, edges, b) for b in itertools.product((0, 1), repeat=n))


def single_edge_depth1(w, gamma, beta):
    """<C> for one edge at depth 1, by explicit 4-amplitude bookkeeping."""
    # amplitudes indexed by z = b0 + 2 b1 after H H
    a = [0.5 + 0j] * 4
    cut = [0.0, w, w, 0.0]
    a = [a[z] * complex(math.cos(gamma * cut[z]), -math.sin(gamma * cut[z])) for z in range(4)]
    c, s = math.cos(beta), -1j * math.sin(beta)
    for q in (0, 1):
        new = list(a)
        for z in range(4):
            if not (z >> q) & 1:
                z1 = z | (1 << q)
                new[z] = c * a[z] + s * a[z1]
                new[z1] = s * a[z] + c * a[z1]
        a = new
    return sum(abs(a[z]) ** 2 * cut[z] for z in range(4))


def random_graph(rng, n, p=0.5, wmin=0.05):
    edges = tuple((i, j, float(rng.uniform(wmin, math.pi)))
                  for i in range(n) for j in range(i + 1, n) if rng.random() < p)
    return edges
