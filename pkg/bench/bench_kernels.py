#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the four hot kernels (Cayley-table construction, group convolution,
double-coset structure counts, one-sided Jacobi SVD) on both backends and
prints the speedups. JIT compilation is excluded via a warmup pass.

    python3 bench/bench_kernels.py --builtin sym:6 --svd-size 96 --repeats 5
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from spherica import builtin_pairs, kernels


def _time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--builtin", default="sym:6",
                        help="pair used for the group-sized kernels (default sym:6)")
    parser.add_argument("--svd-size", type=int, default=96)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    pair = builtin_pairs.build_builtin(args.builtin)
    group = pair.group
    rng = np.random.default_rng(0)
    f = rng.standard_normal(group.order) + 1j * rng.standard_normal(group.order)
    g = rng.standard_normal(group.order) + 1j * rng.standard_normal(group.order)
    mat = rng.standard_normal((args.svd_size, args.svd_size)) \
        + 1j * rng.standard_normal((args.svd_size, args.svd_size))

    cases = {
        "cayley_table": lambda: kernels.cayley_table(group.element_labels),
        "convolve_table": lambda: kernels.convolve_table(f, g, group.mul, group.inv),
        "coset_counts": lambda: kernels.coset_counts(
            group.mul, group.inv, pair.coset_of, pair.representatives),
        "jacobi_svd": lambda: kernels.jacobi_singular_values(mat),
    }

    print(f"pair={args.builtin} order={group.order} cosets={pair.num_cosets} "
          f"svd={args.svd_size}x{args.svd_size} repeats={args.repeats}")
    timings: dict[str, dict[str, float]] = {name: {} for name in cases}
    for backend in ("numba", "numpy"):
        try:
            kernels.use_backend(backend)
        except ImportError:
            print(f"{backend:>6}: unavailable, skipped")
            continue
        kernels.warmup()
        for name, fn in cases.items():
            fn()  # warm any lazy compilation for these shapes
            timings[name][backend] = _time(fn, args.repeats)
    kernels.use_backend("auto")

    header = f"{'kernel':<16} {'numba':>10} {'numpy':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, by_backend in timings.items():
        nb = by_backend.get("numba")
        npy = by_backend.get("numpy")
        nb_s = f"{nb * 1e3:8.2f}ms" if nb is not None else "     n/a"
        np_s = f"{npy * 1e3:8.2f}ms" if npy is not None else "     n/a"
        ratio = f"{npy / nb:7.1f}x" if nb and npy else "     n/a"
        print(f"{name:<16} {nb_s:>10} {np_s:>10} {ratio:>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
