#!/usr/bin/env python3
"""Time the compiled kernels against the pure-Python fallback.

Covers the three hot paths of the Monte Carlo experiments: sparse sampling of
many small graphs, per-sample isolated-triangle counts, component labeling,
and exact diameters. Run from the repository root:

    python benchmarks/bench_backends.py
"""

import time

import numpy as np

import mingle._backend as backend
from mingle import ModelParams, sample_equilibrium_network, sample_gnp


def timed(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_sampling(kernels, samples=20000):
    backend.active = kernels
    for k in range(samples):
        sample_gnp(200, 0.005, seed=k)


def bench_triangles(kernels, nets_csr, repeat_factor=20):
    for _ in range(repeat_factor):
        for n, indptr, indices, deg in nets_csr:
            kernels.isolated_triangles(n, indptr, indices, deg)


def bench_components(kernels, nets_edges, repeat_factor=20):
    for _ in range(repeat_factor):
        for n, i, j in nets_edges:
            kernels.components(n, i, j)


def bench_diameter(kernels, nets_csr):
    for n, indptr, indices, _ in nets_csr:
        kernels.diameter_csr(n, indptr, indices)


def main():
    if backend.compiled is None:
        print("compiled kernels are not built; run `python setup.py build_ext --inplace`")
        return
    original = backend.active

    sparse_nets = [sample_gnp(200, 0.005, seed=k) for k in range(500)]
    sparse_csr = [(net.n, *net.to_csr(), net.degrees()) for net in sparse_nets]
    sparse_edges = [(net.n, np.ascontiguousarray(net.edges[:, 0]),
                     np.ascontiguousarray(net.edges[:, 1])) for net in sparse_nets]
    dense_params = ModelParams(n=400, v1=1.5, v2=1.36, c=0.5)
    dense_nets = [sample_equilibrium_network(dense_params, seed=k) for k in range(20)]
    dense_csr = [(net.n, *net.to_csr(), net.degrees()) for net in dense_nets]

    rows = []
    cases = [
        ("sample 20k sparse G(200, .005)", lambda ker: bench_sampling(ker)),
        ("isolated triangles x 10k graphs", lambda ker: bench_triangles(ker, sparse_csr)),
        ("components x 10k graphs", lambda ker: bench_components(ker, sparse_edges)),
        ("exact diameter x 20 (n=400)", lambda ker: bench_diameter(ker, dense_csr)),
    ]
    try:
        for name, fn in cases:
            t_py = timed(lambda: fn(backend.python))
            t_cy = timed(lambda: fn(backend.compiled))
            rows.append((name, t_py, t_cy))
    finally:
        backend.active = original

    width = max(len(r[0]) for r in rows)
    print(f"{'benchmark':<{width}}  {'python':>9}  {'cython':>9}  {'speedup':>7}")
    for name, t_py, t_cy in rows:
        print(f"{name:<{width}}  {t_py:>8.3f}s  {t_cy:>8.3f}s  {t_py / t_cy:>6.1f}x")


if __name__ == "__main__":
    main()
