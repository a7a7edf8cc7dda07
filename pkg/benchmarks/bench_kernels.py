#!/usr/bin/env python3
"""Benchmark: compiled kernel core versus the NumPy fallback.

Times the hot sweep kernels on representative workloads (the same shapes
the verification suites use) and prints a per-kernel comparison.  Run
after building the extension in place:

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from rankcalc._kernels import _fallback

try:
    from rankcalc._kernels import _core
except ImportError:
    _core = None


def _vectors(seed, count, n, max_rank):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        vec = [rng.randrange(max_rank + 1) for _ in range(n)]
        low = min(vec)
        out.append(tuple(v - low for v in vec))
    return out


VEC8 = _vectors(1, 400, 8, 5)
ATOMS8 = [0b00000011, 0b00001100, 0b00110000, 0b11000000]
VEC4 = _vectors(2, 400, 4, 3)

_rng = random.Random(3)
TABLE_8x8 = [[_rng.randrange(6) for _ in range(8)] for _ in range(8)]
R8A = [_rng.randrange(6) for _ in range(8)]
R8B = [_rng.randrange(6) for _ in range(8)]


def bench_rank_tables(impl):
    for vec in VEC8:
        impl.rank_table(vec)
        impl.scan_rank_table(vec)


def bench_basic_laws(impl):
    for vec in VEC8:
        impl.basic_laws_sweep(vec)


def bench_partition_laws(impl):
    for vec in VEC8:
        impl.partition_laws_sweep(vec, ATOMS8)


def bench_union_law(impl):
    for vec in VEC4:
        impl.union_law_sweep(vec)


def bench_additivity(impl):
    for _ in range(200):
        impl.additivity_check(TABLE_8x8, R8A, R8B)


def bench_bridge(impl):
    for vec in VEC8:
        orders = impl.poly_order_table(vec, [1] * 8)
        ranks = impl.rank_table(vec)
        impl.bridge_pair_sweep(orders, ranks)


BENCHES = [
    ("rank tables (400 x 8 worlds)", bench_rank_tables),
    ("pairwise law sweep (400 x 8 worlds)", bench_basic_laws),
    ("partition law sweep (400 x 8 worlds)", bench_partition_laws),
    ("union-law triple sweep (400 x 4 worlds)", bench_union_law),
    ("member additivity (200 x 8x8 atoms)", bench_additivity),
    ("order-vs-rank sweep (400 x 8 worlds)", bench_bridge),
]


def _time(func, impl, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        func(impl)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per benchmark (best is reported)")
    args = parser.parse_args()

    print("%-42s %12s %12s %9s" % ("kernel", "fallback", "compiled", "speedup"))
    for name, func in BENCHES:
        fallback_s = _time(func, _fallback, args.repeat)
        if _core is None:
            print("%-42s %10.1f ms %12s %9s"
                  % (name, fallback_s * 1e3, "n/a", "n/a"))
            continue
        compiled_s = _time(func, _core, args.repeat)
        print("%-42s %10.1f ms %10.1f ms %8.1fx"
              % (name, fallback_s * 1e3, compiled_s * 1e3,
                 fallback_s / compiled_s))
    if _core is None:
        print("\ncompiled core not built; showing fallback only "
              "(pip install -e . builds it)")


if __name__ == "__main__":
    main()
