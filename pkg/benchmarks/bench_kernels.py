#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage:  python benchmarks/bench_kernels.py [--repeat N]

Workloads mirror the hottest call sites: Koch refinement to step 8,
polyline length over the resulting 196k segments, the sup-distance
sampling oracle on a staircase iteration, a large float shoelace, and a
million-point Simpson quadrature.
"""

import argparse
import math
import time
from array import array

from paradoxlab._kernels import _fallback

try:
    from paradoxlab._kernels import _native
except ImportError:
    _native = None


def koch_vertices(impl, n):
    xs = array("d", [0.0, 1.0, 0.5])
    ys = array("d", [0.0, 0.0, math.sqrt(3.0) / 2.0])
    for _ in range(n):
        xs, ys = impl.koch_refine(xs, ys)
    return xs, ys


def segments_table(xs, ys):
    m = len(xs)
    tab = array("d", bytes(8 * 7 * m))
    k = 0
    for i in range(m):
        j = (i + 1) % m
        tab[k + 1] = xs[i]
        tab[k + 2] = ys[i]
        tab[k + 3] = xs[j]
        tab[k + 4] = ys[j]
        k += 7
    return tab


def staircase_table(units):
    # iso-right roofs over [0, 2]: 2 segments per unit
    tab = array("d", bytes(8 * 7 * 2 * units))
    k = 0
    for i in range(units):
        x0 = 2.0 * i / units
        x1 = 2.0 * (i + 1) / units
        apex_x, apex_y = 0.5 * (x0 + x1), 0.5 * (x1 - x0)
        for (ax, ay, bx, by) in ((x0, 0.0, apex_x, apex_y), (apex_x, apex_y, x1, 0.0)):
            tab[k + 1] = ax
            tab[k + 2] = ay
            tab[k + 3] = bx
            tab[k + 4] = by
            k += 7
    return tab


def timed(func, repeat):
    best = math.inf
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = func()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _native is None:
        print("native kernels not built; run pip install -e . first")
        return

    xs, ys = koch_vertices(_native, 8)
    koch_tab = segments_table(xs, ys)
    stair_tab = staircase_table(2048)

    workloads = [
        (
            "koch_refine to step 8 (196k segments)",
            lambda impl: timed(lambda: len(koch_vertices(impl, 8)[0]), args.repeat),
        ),
        (
            "curve_length, koch step-8 table",
            lambda impl: timed(lambda: impl.curve_length(koch_tab), args.repeat),
        ),
        (
            "sup_distance, 2048-unit staircase x 256 samples",
            lambda impl: timed(
                lambda: impl.sup_distance(stair_tab, 0.0, 0.0, 2.0, 0.0, 256),
                args.repeat,
            ),
        ),
        (
            "shoelace, 196k-gon",
            lambda impl: timed(lambda: impl.shoelace(xs, ys), args.repeat),
        ),
        (
            "simpson 1/x on [1, 1e4], 1e6 subdivisions",
            lambda impl: timed(
                lambda: impl.simpson_inv_power(1, 1e4, 1_000_000), args.repeat
            ),
        ),
    ]

    print(f"{'workload':<48} {'native':>10} {'pure':>10} {'speedup':>9}")
    print("-" * 80)
    for name, runner_ in workloads:
        native_t, native_v = runner_(_native)
        pure_t, pure_v = runner_(_fallback)
        if isinstance(native_v, float):
            assert native_v == pure_v, name  # identical op order, identical result
        print(f"{name:<48} {native_t * 1e3:>8.2f}ms {pure_t * 1e3:>8.2f}ms {pure_t / native_t:>8.1f}x")


if __name__ == "__main__":
    main()
