#!/usr/bin/env python3
"""Compare the compiled and pure-Python kernels on the reduction hot path.

Usage: python benchmarks/bench_backends.py [--k K] [--n N] [--repeat R]

The workload reduces every inverse-class component cbar_1 .. cbar_(n+k)
to the Schur basis of G(k,n), which is dominated by vertical-strip
enumeration inside the iterated Pieri expansion.
"""

import argparse
import time

from grasscoh import _backend, _kernel_py
from grasscoh.freepoly import dual_class_closed
from grasscoh.ring import RingContext, reduce_free

try:
    from grasscoh import _kernel_cy
except ImportError:
    _kernel_cy = None


def workload(k, n):
    ctx = RingContext(k, n)
    acc = 0
    for i in range(1, n + k + 1):
        acc += len(reduce_free(dual_class_closed(i, k), ctx).terms)
    return acc


def bench(kernel, k, n, repeat):
    prev = _backend.set_kernel(kernel)
    try:
        best = float("inf")
        checksum = None
        for _ in range(repeat):
            _backend.clear_caches()
            start = time.perf_counter()
            checksum = workload(k, n)
            best = min(best, time.perf_counter() - start)
        return best, checksum
    finally:
        _backend.set_kernel(prev)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=5)
    ap.add_argument("--n", type=int, default=9)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    results = {}
    kernels = [("python", _kernel_py)]
    if _kernel_cy is not None:
        kernels.append(("cython", _kernel_cy))
    else:
        print("compiled kernel not built; benchmarking pure Python only")

    for name, kernel in kernels:
        best, checksum = bench(kernel, args.k, args.n, args.repeat)
        results[name] = (best, checksum)
        print(f"{name:8s} best of {args.repeat}: {best:.3f}s "
              f"(checksum {checksum})")

    if len(results) == 2:
        py, cy = results["python"][0], results["cython"][0]
        assert results["python"][1] == results["cython"][1], "kernels disagree"
        print(f"speedup: {py / cy:.2f}x")


if __name__ == "__main__":
    main()
