import numpy as np
import pytest

from explainrec import kernels


def rand(shape, seed):
    return np.random.default_rng(seed).standard_normal(shape)


def test_pairwise_cosine_matches_manual():
    a = rand((5, 16), 1)
    b = rand((7, 16), 2)
    got = kernels.pairwise_cosine(a, b)
    for i in range(5):
        for j in range(7):
            expect = a[i] @ b[j] / (np.linalg.norm(a[i]) * np.linalg.norm(b[j]))
            assert got[i, j] == pytest.approx(expect, abs=1e-12)


def test_pairwise_cosine_clamped():
    a = np.array([[1.0, 0.0], [3.0, 0.0]])
    got = kernels.pairwise_cosine(a, a)
    assert got.max() <= 1.0
    assert got[0, 1] == 1.0


def test_weighted_mean_matches_manual():
    rows = rand((6, 9), 3)
    w = np.abs(rand(6, 4)) + 0.1
    got = kernels.weighted_mean(rows, w)
    expect = (rows * w[:, None]).sum(axis=0) / w.sum()
    np.testing.assert_allclose(got, expect, atol=1e-12)


def test_pagerank_uniform_on_regular_graph():
    # every node of a cycle has the same centrality
    n = 6
    adj = np.zeros((n, n))
    for i in range(n):
        adj[i, (i + 1) % n] = adj[(i + 1) % n, i] = 1.0
    ranks, deltas = kernels.pagerank(adj, 0.85, 100, 1e-12)
    np.testing.assert_allclose(ranks, np.full(n, 1.0 / n), atol=1e-9)
    assert deltas[-1] < 1e-12


def test_pagerank_mass_conserved_and_monotone():
    rng = np.random.default_rng(7)
    adj = (rng.random((25, 25)) < 0.15).astype(float)
    adj = np.triu(adj, 1)
    adj = adj + adj.T
    ranks, deltas = kernels.pagerank(adj, 0.85, 50, 1e-6)
    assert ranks.sum() == pytest.approx(1.0, abs=1e-9)
    assert all(d2 < d1 for d1, d2 in zip(deltas, deltas[1:]))


def test_pagerank_dangling_nodes():
    # isolated node keeps a positive rank from redistribution
    adj = np.zeros((3, 3))
    adj[0, 1] = adj[1, 0] = 1.0
    ranks, _ = kernels.pagerank(adj, 0.85, 100, 1e-10)
    assert ranks[2] > 0.0
    assert ranks.sum() == pytest.approx(1.0, abs=1e-9)


@pytest.mark.skipif(not kernels.HAS_NUMBA, reason="numba unavailable")
def test_numba_and_numpy_paths_agree():
    a = rand((12, 50), 10)
    b = rand((8, 50), 11)
    w = np.abs(rand(12, 12)) + 0.01
    adj = np.abs(np.triu(rand((20, 20), 13), 1))
    adj = adj + adj.T

    np.testing.assert_allclose(kernels.pairwise_cosine_nb(a, b),
                               kernels.pairwise_cosine_np(a, b), atol=1e-12)
    np.testing.assert_allclose(kernels.weighted_mean_nb(a, w),
                               kernels.weighted_mean_np(a, w), atol=1e-12)
    r_nb, d_nb = kernels.pagerank_nb(adj, 0.85, 50, 1e-6)
    r_np, d_np = kernels.pagerank_np(adj, 0.85, 50, 1e-6)
    np.testing.assert_allclose(r_nb, r_np, atol=1e-12)
    assert len(d_nb) == len(d_np)
