#!/usr/bin/env python3
"""Benchmark the pure-Python and compiled search kernels against each other.

Runs the same exhaustive shard enumeration through both backends, checks
they return identical results, and prints a timing table. The heavy shapes
behind --full take a few extra seconds on the pure-Python side.

Usage:
    python3 benchmarks/bench_kernel.py [--repeat N] [--full]
"""

import argparse
import time
from math import comb

from codespectra import _kernel_py
from codespectra.search import _weight_table, canonical_columns
from codespectra.weights import builtin

try:
    from codespectra import _kernel as _kernel_c
except ImportError:
    _kernel_c = None

SHAPES = [
    (6, 2, 5, "lee"),
    (8, 2, 5, "lee"),
    (5, 2, 7, "lee"),
    (5, 3, 3, "manhattan"),
]
FULL_SHAPES = [
    (10, 2, 5, "lee"),
    (11, 2, 5, "lee"),
]


def run(impl, n, k, q, name, repeat):
    wf = builtin(name, q)
    cc = canonical_columns(k, q, wf)
    colw = _weight_table(cc, wf)
    import numpy as np

    cols = np.array(cc, dtype=np.intc)
    max_weight = n * max(wf.table)
    best_time = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        out = impl.enumerate_shard(
            colw, cols, q, n, k, max_weight, 0, len(cc), 16
        )
        best_time = min(best_time, time.perf_counter() - start)
        result = out
    best, witnesses, evaluated = result
    return best_time, (int(best), sorted(map(tuple, witnesses)), int(evaluated))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="runs per backend; best time wins")
    parser.add_argument("--full", action="store_true", help="include the larger shapes")
    args = parser.parse_args()

    shapes = SHAPES + (FULL_SHAPES if args.full else [])
    header = f"{'shape':>24} {'multisets':>10} {'python':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n, k, q, name in shapes:
        wf = builtin(name, q)
        total = comb(len(canonical_columns(k, q, wf)) + n - 1, n)
        py_t, py_out = run(_kernel_py, n, k, q, name, args.repeat)
        label = f"n={n} k={k} q={q} {name}"
        if _kernel_c is None:
            print(f"{label:>24} {total:>10} {py_t:>9.3f}s {'absent':>10} {'':>8}")
            continue
        c_t, c_out = run(_kernel_c, n, k, q, name, args.repeat)
        if py_out != c_out:
            raise SystemExit(f"backend disagreement at {label}: {py_out} vs {c_out}")
        print(f"{label:>24} {total:>10} {py_t:>9.3f}s {c_t:>9.3f}s {py_t / c_t:>7.1f}x")
    if _kernel_c is None:
        print("compiled kernel not built; only the pure-Python timings are shown")
    else:
        print("all results identical across backends")


if __name__ == "__main__":
    main()
