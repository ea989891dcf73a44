#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Workloads mirror what the verification sweeps actually do: many medium-length
q-Pochhammer log-sums, a few long geometric tail sums near q -> 1, and one
large digamma partial sum. Numba JIT compilation happens in an untimed
warm-up pass; each workload reports the best of --repeat runs.

Run from the repository root:

    python3 benchmarks/bench_backends.py [--repeat 5]
"""

import argparse
import time

import numpy as np

from qgamma import _kernels_numpy

try:
    from qgamma import _kernels_numba
except ImportError:
    _kernels_numba = None


def pochhammer_sweep(kernels):
    total = 0.0
    for shift in np.linspace(1.0, 4.0, 400):
        total += kernels.log_qpochhammer(0.97**shift, 0.97, 1e-13, 10_000_000)[0]
    return total


def geometric_near_one(kernels):
    total = 0.0
    for shift in np.linspace(1.0, 3.0, 20):
        total += kernels.geometric_series(float(shift), 0.999, 1e-13, 10_000_000)[0]
    return total


def digamma_sum(kernels):
    return kernels.digamma_partial_sum(2.0, 5_000_000)


WORKLOADS = [
    ("log_qpochhammer x400 @ q=0.97", pochhammer_sweep),
    ("geometric_series x20 @ q=0.999", geometric_near_one),
    ("digamma_partial_sum 5e6 terms", digamma_sum),
]


def best_time(fn, kernels, repeat):
    best = np.inf
    for _ in range(repeat):
        start = time.perf_counter()
        fn(kernels)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if _kernels_numba is None:
        print("numba not importable; benchmarking the numpy fallback only\n")
    else:
        for _, fn in WORKLOADS:  # warm-up: trigger JIT compilation
            fn(_kernels_numba)

    header = f"{'workload':34s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for name, fn in WORKLOADS:
        t_np = best_time(fn, _kernels_numpy, args.repeat)
        if _kernels_numba is None:
            print(f"{name:34s} {t_np * 1e3:9.2f}ms {'-':>10s} {'-':>8s}")
            continue
        t_nb = best_time(fn, _kernels_numba, args.repeat)
        check_np = fn(_kernels_numpy)
        check_nb = fn(_kernels_numba)
        assert np.isclose(check_np, check_nb, rtol=1e-10), (name, check_np, check_nb)
        print(
            f"{name:34s} {t_np * 1e3:9.2f}ms {t_nb * 1e3:9.2f}ms "
            f"{t_np / t_nb:7.1f}x"
        )


if __name__ == "__main__":
    main()
