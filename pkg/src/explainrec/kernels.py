"""Numeric kernels: batch cosine similarity, weighted row means, and the
degree-normalized centrality iteration used by keyphrase extraction.

These are the hot inner loops of the engine. Each kernel has a pure-numpy
implementation (``*_np``) and, when numba is importable, a JIT-compiled loop
version (``*_nb``). The public names (``pairwise_cosine``, ``weighted_mean``,
``pagerank``) are bound at import time: numba wins when available unless the
environment variable ``EXPLAINREC_NUMBA=0`` forces the numpy path.

``benchmarks/bench_kernels.py`` times both paths on large synthetic inputs.
"""

import os

import numpy as np

try:
    from numba import njit
    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

USING_NUMBA = HAS_NUMBA and os.environ.get("EXPLAINREC_NUMBA", "1") != "0"


# --- pure numpy path ----------------------------------------------------------

def pairwise_cosine_np(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Cosine similarity between every row of a (n,d) and of b (m,d).

    Rows must have nonzero norm; values are clamped to [-1, 1] against
    floating-point overshoot.
    """
    na = np.linalg.norm(a, axis=1)
    nb = np.linalg.norm(b, axis=1)
    out = (a @ b.T) / np.outer(na, nb)
    return np.clip(out, -1.0, 1.0)


def weighted_mean_np(rows: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """Weighted average of the rows of a (n,d) matrix; weights sum must be > 0."""
    return (rows * weights[:, None]).sum(axis=0) / weights.sum()


def pagerank_np(adjacency: np.ndarray, damping: float = 0.85,
                max_iter: int = 50, tol: float = 1e-6):
    """Degree-normalized iterative centrality over a dense weighted adjacency.

    Undirected graphs are passed as symmetric matrices. Zero-degree nodes are
    treated as dangling: their rank mass is redistributed uniformly. Returns
    (ranks, deltas) where deltas[i] is the L1 change after iteration i; the
    loop stops once the change drops below tol.
    """
    n = adjacency.shape[0]
    degree = adjacency.sum(axis=1)
    dangling = degree == 0.0
    safe_degree = np.where(dangling, 1.0, degree)
    transition = adjacency / safe_degree[:, None]

    ranks = np.full(n, 1.0 / n)
    deltas = []
    base = (1.0 - damping) / n
    for _ in range(max_iter):
        dangling_mass = ranks[dangling].sum() / n
        new = base + damping * (transition.T @ ranks + dangling_mass)
        delta = np.abs(new - ranks).sum()
        ranks = new
        deltas.append(delta)
        if delta < tol:
            break
    return ranks, np.array(deltas)


# --- numba path ----------------------------------------------------------------

if HAS_NUMBA:

    @njit(cache=True)
    def pairwise_cosine_nb(a, b):
        n, d = a.shape
        m = b.shape[0]
        out = np.empty((n, m))
        norms_b = np.empty(m)
        for j in range(m):
            s = 0.0
            for k in range(d):
                s += b[j, k] * b[j, k]
            norms_b[j] = np.sqrt(s)
        for i in range(n):
            s = 0.0
            for k in range(d):
                s += a[i, k] * a[i, k]
            na = np.sqrt(s)
            for j in range(m):
                dot = 0.0
                for k in range(d):
                    dot += a[i, k] * b[j, k]
                c = dot / (na * norms_b[j])
                if c > 1.0:
                    c = 1.0
                elif c < -1.0:
                    c = -1.0
                out[i, j] = c
        return out

    @njit(cache=True)
    def weighted_mean_nb(rows, weights):
        n, d = rows.shape
        out = np.zeros(d)
        wsum = 0.0
        for i in range(n):
            w = weights[i]
            wsum += w
            for k in range(d):
                out[k] += rows[i, k] * w
        for k in range(d):
            out[k] /= wsum
        return out

    @njit(cache=True)
    def pagerank_nb(adjacency, damping=0.85, max_iter=50, tol=1e-6):
        n = adjacency.shape[0]
        degree = np.zeros(n)
        for i in range(n):
            for j in range(n):
                degree[i] += adjacency[i, j]

        ranks = np.full(n, 1.0 / n)
        deltas = np.empty(max_iter)
        base = (1.0 - damping) / n
        used = 0
        for it in range(max_iter):
            dangling_mass = 0.0
            for i in range(n):
                if degree[i] == 0.0:
                    dangling_mass += ranks[i]
            dangling_mass /= n

            new = np.empty(n)
            for j in range(n):
                acc = 0.0
                for i in range(n):
                    if degree[i] > 0.0:
                        acc += adjacency[i, j] / degree[i] * ranks[i]
                new[j] = base + damping * (acc + dangling_mass)

            delta = 0.0
            for i in range(n):
                delta += abs(new[i] - ranks[i])
                ranks[i] = new[i]
            deltas[it] = delta
            used = it + 1
            if delta < tol:
                break
        return ranks, deltas[:used]


if USING_NUMBA:
    pairwise_cosine = pairwise_cosine_nb
    weighted_mean = weighted_mean_nb
    pagerank = pagerank_nb
else:
    pairwise_cosine = pairwise_cosine_np
    weighted_mean = weighted_mean_np
    pagerank = pagerank_np


def cosine_parts(a: np.ndarray, b: np.ndarray):
    """Dot product, both norms, and clamped cosine for two vectors.

    Scalar path used for the overall model-vs-publication similarity and for
    the arithmetic shown in the step-by-step trace; always plain numpy so the
    traced numbers are the exact ones the recommender produced.
    """
    dot = float(np.dot(a, b))
    na = float(np.linalg.norm(a))
    nb = float(np.linalg.norm(b))
    cos = dot / (na * nb)
    return dot, na, nb, max(-1.0, min(1.0, cos))


def warm_up():
    """Trigger JIT compilation of the active kernels on tiny inputs."""
    a = np.ones((2, 3))
    w = np.ones(2)
    pairwise_cosine(a, a)
    weighted_mean(a, w)
    pagerank(np.ones((2, 2)), 0.85, 5, 1e-6)
