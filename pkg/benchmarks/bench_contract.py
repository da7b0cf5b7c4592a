"""Benchmark the contraction kernels: numba-jitted loop vs vectorized numpy.

Usage: python3 benchmarks/bench_contract.py [--repeats N]

Times the sparse tensor-times-vector contraction (the power method's inner
loop) on random tensors of growing size, for both backends, and prints a
small table with the speedup of numba over numpy.
"""

import argparse
import time

import numpy as np

from specrad.kernels import _build_numba_kernel, contract_numpy
from specrad.simulate import random_tensor

CASES = [
    # (n, order, density)
    (10, 3, 0.2),
    (30, 3, 0.05),
    (50, 3, 0.05),
    (100, 3, 0.01),
    (20, 4, 0.01),
    (40, 4, 0.002),
]


def time_kernel(kernel, rows, trail, vals, x, n, repeats):
    kernel(rows, trail, vals, x, n)  # warmup (jit compile / cache touch)
    best = np.inf
    for _ in range(repeats):
        start = time.perf_counter()
        kernel(rows, trail, vals, x, n)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=50)
    args = parser.parse_args()

    try:
        contract_numba = _build_numba_kernel()
    except ImportError:
        print("numba is not importable; benchmarking numpy only")
        contract_numba = None

    rng = np.random.default_rng(0)
    print(f"{'n':>4} {'m':>2} {'nnz':>8} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for n, order, density in CASES:
        T = random_tensor(n, order, density, rng)
        rows, trail, vals = T._coo()
        x = rng.random(n) + 0.01
        t_np = time_kernel(contract_numpy, rows, trail, vals, x, n, args.repeats)
        if contract_numba is None:
            print(f"{n:>4} {order:>2} {vals.size:>8} {t_np:>10.2e} {'-':>10} {'-':>8}")
            continue
        t_nb = time_kernel(contract_numba, rows, trail, vals, x, n, args.repeats)
        assert np.allclose(
            contract_numpy(rows, trail, vals, x, n),
            contract_numba(rows, trail, vals, x, n),
        )
        print(
            f"{n:>4} {order:>2} {vals.size:>8} {t_np:>10.2e} {t_nb:>10.2e} "
            f"{t_np / t_nb:>7.1f}x"
        )


if __name__ == "__main__":
    main()
