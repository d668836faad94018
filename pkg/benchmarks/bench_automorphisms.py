#!/usr/bin/env python3
"""Benchmark the two automorphism-search kernels against each other.

The backtracking search over line images is the package's one hot loop;
everything else is desk-scale exact arithmetic. This script times the
compiled kernel and the pure-Python twin on the catalog structures and on
two larger glued structures, and verifies that the results agree.

Usage: python benchmarks/bench_automorphisms.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from zarpair import _autkernel_py
from zarpair.catalog import (
    extended_maclane_explicit,
    maclane_combinatorics,
    rybnikov_explicit,
)
from zarpair.gluing import glue_combinatorics

try:
    from zarpair import _autkernel as compiled
except ImportError:
    compiled = None


def cases():
    cm = extended_maclane_explicit()
    cr = rybnikov_explicit()
    yield "maclane (8 lines)", maclane_combinatorics()
    yield "ext-maclane (9 lines)", cm
    yield "ext-rybnikov (15 lines)", cr
    yield "glued 15+9 (21 lines)", glue_combinatorics(cr, cm)
    yield "glued 15+15 (27 lines)", glue_combinatorics(cr, cr)


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="runs per case")
    args = parser.parse_args()

    if compiled is None:
        print("compiled kernel unavailable; timing the pure kernel only\n")

    header = f"{'structure':<26} {'order':>7} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, comb in cases():
        points = [tuple(i - 1 for i in p) for p in comb.points]
        n = comb.n_lines
        pure_t, pure_result = best_of(
            args.repeat, lambda: _autkernel_py.search_line_maps(n, points, points, True)
        )
        if compiled is not None:
            comp_t, comp_result = best_of(
                args.repeat, lambda: compiled.search_line_maps(n, points, points, True)
            )
            assert comp_result == pure_result, f"kernel disagreement on {name}"
            print(
                f"{name:<26} {len(pure_result):>7} {pure_t:>9.4f}s {comp_t:>9.4f}s "
                f"{pure_t / comp_t:>7.1f}x"
            )
        else:
            print(f"{name:<26} {len(pure_result):>7} {pure_t:>9.4f}s {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
