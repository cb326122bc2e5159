#!/usr/bin/env python3
"""Benchmark: compiled contraction kernel vs the pure-Python fallback.

The contraction expansion is the hot inner loop of every Weyl product, so
this is the piece the optional Cython extension accelerates.  Two
workloads: raw kernel calls on synthetic exponent pairs (cache disabled
by unique inputs), and end-to-end normal-ordered products of random
elements with the shared memo cache cleared between runs.

Usage: python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import random
import time

from weylharm import _ccr_py

try:
    from weylharm import _ccr

    BACKENDS = [("cython", _ccr.contractions), ("python", _ccr_py.contractions)]
except ImportError:
    _ccr = None
    BACKENDS = [("python", _ccr_py.contractions)]


def synthetic_pairs(count, d, max_exp, seed=0):
    rng = random.Random(seed)
    return [
        (
            tuple(rng.randint(0, max_exp) for _ in range(d)),
            tuple(rng.randint(0, max_exp) for _ in range(d)),
        )
        for _ in range(count)
    ]


def bench_kernel_calls(fn, pairs, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        for ann, cre in pairs:
            fn(ann, cre)
        times.append(time.perf_counter() - start)
    return min(times)


def bench_products(backend_name, repeat, seed=0):
    import weylharm._kernel as kernel
    from weylharm.verify import random_weyl

    original = kernel._contractions
    kernel._contractions = dict(BACKENDS)[backend_name]
    try:
        rng = random.Random(seed)
        elements = [
            (random_weyl(rng, 2, 6, 6), random_weyl(rng, 2, 6, 6))
            for _ in range(60)
        ]
        times = []
        for _ in range(repeat):
            kernel._cache.clear()
            start = time.perf_counter()
            for x, y in elements:
                x * y
            times.append(time.perf_counter() - start)
        return min(times)
    finally:
        kernel._contractions = original
        kernel._cache.clear()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    pairs = synthetic_pairs(4000, d=3, max_exp=6)
    print(f"kernel calls: {len(pairs)} synthetic exponent pairs, d=3, exp<=6")
    results = {}
    for name, fn in BACKENDS:
        best = bench_kernel_calls(fn, pairs, args.repeat)
        results[name] = best
        print(f"  {name:<8} {best * 1e3:8.2f} ms  "
              f"({len(pairs) / best:,.0f} calls/s)")
    if len(results) == 2:
        print(f"  speedup  {results['python'] / results['cython']:.2f}x")

    print("normal-ordered products: 60 random pairs, d=2, degree<=6, cold cache")
    prod_results = {}
    for name, _ in BACKENDS:
        best = bench_products(name, args.repeat)
        prod_results[name] = best
        print(f"  {name:<8} {best * 1e3:8.2f} ms")
    if len(prod_results) == 2:
        print(f"  speedup  {prod_results['python'] / prod_results['cython']:.2f}x")
    if _ccr is None:
        print("note: compiled kernel not built; only the fallback was timed")


if __name__ == "__main__":
    main()
