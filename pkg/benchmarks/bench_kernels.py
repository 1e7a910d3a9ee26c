#!/usr/bin/env python3
"""Benchmark the JIT-compiled kernels against the pure-numpy fallbacks.

The engine binds one path at import time (numba when importable, numpy when
EXPLAINREC_NUMBA=0 or numba is missing); this script times both on workloads
shaped like the real hot paths: batch keyword-vs-interest cosine grids,
publication-embedding weighted means, and the extraction centrality loop.

Usage: python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import sys
import time

import numpy as np

sys.path.insert(0, "src")

from explainrec import kernels  # noqa: E402


def bench(func, *args, repeat=5, warmup=True, inner=1):
    if warmup:
        func(*args)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for _ in range(inner):
            func(*args)
        best = min(best, (time.perf_counter() - t0) / inner)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if not kernels.HAS_NUMBA:
        print("numba is not importable; nothing to compare")
        return

    rng = np.random.default_rng(0)
    workloads = [
        # engine scale: one publication's keyword-vs-interest grid; the
        # recommender issues tens of thousands of these per acceptance run
        ("pairwise_cosine 10x50 . 5x50 (x10k)",
         kernels.pairwise_cosine_nb, kernels.pairwise_cosine_np,
         (rng.standard_normal((10, 50)), rng.standard_normal((5, 50))), 10000),
        ("weighted_mean 10x50 (x10k)",
         kernels.weighted_mean_nb, kernels.weighted_mean_np,
         (rng.standard_normal((10, 50)),
          np.abs(rng.standard_normal(10)) + 0.01), 10000),
        ("pagerank 100x100 one document (x200)",
         kernels.pagerank_nb, kernels.pagerank_np,
         (np.abs(rng.standard_normal((100, 100))), 0.85, 50, 1e-6), 200),
        # batch scale: where BLAS-backed numpy catches up or wins
        ("pairwise_cosine 20000x50 . 5x50",
         kernels.pairwise_cosine_nb, kernels.pairwise_cosine_np,
         (rng.standard_normal((20000, 50)), rng.standard_normal((5, 50))), 1),
        ("pairwise_cosine 2000x50 . 2000x50",
         kernels.pairwise_cosine_nb, kernels.pairwise_cosine_np,
         (rng.standard_normal((2000, 50)), rng.standard_normal((2000, 50))), 1),
        ("weighted_mean 200000x50",
         kernels.weighted_mean_nb, kernels.weighted_mean_np,
         (rng.standard_normal((200000, 50)),
          np.abs(rng.standard_normal(200000)) + 0.01), 1),
        ("pagerank 600x600 (50 iters)",
         kernels.pagerank_nb, kernels.pagerank_np,
         (np.abs(rng.standard_normal((600, 600))), 0.85, 50, 0.0), 1),
    ]

    print(f"{'workload':42s} {'numba':>11s} {'numpy':>11s} {'speedup':>8s}")
    for name, nb, np_, data, inner in workloads:
        t_nb = bench(nb, *data, repeat=args.repeat, inner=inner)
        t_np = bench(np_, *data, repeat=args.repeat, inner=inner)
        print(f"{name:42s} {t_nb * 1e6:9.1f}us {t_np * 1e6:9.1f}us "
              f"{t_np / t_nb:7.2f}x")


if __name__ == "__main__":
    main()
