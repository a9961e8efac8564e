#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

The kernel is a Faddeev-LeVerrier pass over arbitrary-size integers: the
arithmetic cost is identical in both backends (same Python ints), so the
table below isolates the interpreter's loop and indexing overhead.

    python benchmarks/bench_kernels.py [--sizes 8,12,16,24,32] [--repeats 3]
"""

import argparse
import random
import statistics
import time

from joinspectra import _kernels_py

try:
    from joinspectra import _kernels
except ImportError:
    _kernels = None


def time_once(fn, a, n):
    t0 = time.perf_counter()
    fn(a, n)
    return time.perf_counter() - t0


def best_of(fn, a, n, repeats):
    return min(time_once(fn, a, n) for _ in range(repeats))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="8,12,16,24,32")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    rng = random.Random(args.seed)

    if _kernels is None:
        print("compiled kernel not built; showing the pure backend only")
    header = f"{'n':>4}  {'python (ms)':>12}"
    if _kernels is not None:
        header += f"  {'cython (ms)':>12}  {'speedup':>8}"
    print(header)
    speedups = []
    for n in sizes:
        a = [rng.randint(-3, 3) for _ in range(n * n)]
        t_py = best_of(_kernels_py.charpoly_adjugate_int, a, n, args.repeats)
        line = f"{n:>4}  {t_py * 1e3:>12.2f}"
        if _kernels is not None:
            t_cy = best_of(_kernels.charpoly_adjugate_int, a, n, args.repeats)
            assert _kernels.charpoly_adjugate_int(a, n) == _kernels_py.charpoly_adjugate_int(a, n)
            speedups.append(t_py / t_cy)
            line += f"  {t_cy * 1e3:>12.2f}  {t_py / t_cy:>7.1f}x"
        print(line)
    if speedups:
        print(f"\nmedian speedup: {statistics.median(speedups):.1f}x")


if __name__ == "__main__":
    main()
