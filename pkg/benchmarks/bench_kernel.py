#!/usr/bin/env python3
"""Benchmark the compiled motion kernel against the pure-Python fallback.

Both backends implement the same ``simulate_core`` contract and return
bit-identical results; this script measures how much wall-clock time the
compiled extension saves on representative segment lengths.

Usage:
    python3 benchmarks/bench_kernel.py [--repeats N] [--lengths L ...]
"""

import argparse
import math
import statistics
import time

from linemaze import _kernel_py
from linemaze.motion_sim import MotionParams

try:
    from linemaze import _kernel as _kernel_c
except ImportError:
    _kernel_c = None


def core_args(length, params, alpha0):
    fl, fr = params.wheel_factors()
    k = params.inner_rot_const
    rp_l = params.pivot_arc_left + params.pivot_lin_left
    rp_r = params.pivot_arc_right + params.pivot_lin_right + k
    lp_l = params.pivot_arc_left + params.pivot_lin_left + k
    lp_r = params.pivot_arc_right + params.pivot_lin_right
    max_steps = int(40.0 * length / params.step) + 10000
    return (length, params.h, alpha0, params.theta, params.kappa, fl, fr,
            rp_l, rp_r, lp_l, lp_r, params.step, max_steps)


def best_time(func, args, repeats):
    # Best-of-N wall time; the minimum is the least noisy point estimate
    # for a deterministic CPU-bound call.
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        result = func(*args)
        samples.append(time.perf_counter() - start)
    return min(samples), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=20,
                        help="timing repetitions per case (default 20)")
    parser.add_argument("--lengths", type=float, nargs="+",
                        default=[1.0, 10.0, 100.0, 1000.0],
                        help="segment lengths in cm (default 1 10 100 1000)")
    args = parser.parse_args()

    params = MotionParams()
    alpha0 = math.radians(9.5)

    print(f"pure backend:     {_kernel_py.__name__}")
    if _kernel_c is None:
        print("compiled backend: NOT BUILT (install with the extension "
              "compiled to compare)")
    else:
        print(f"compiled backend: {_kernel_c.__name__}")
    print()
    header = f"{'length':>8}  {'steps':>9}  {'pure':>12}  {'compiled':>12}  {'speedup':>8}"
    print(header)
    print("-" * len(header))

    speedups = []
    for length in args.lengths:
        call = core_args(length, params, alpha0)
        pure_t, pure_r = best_time(_kernel_py.simulate_core, call,
                                   args.repeats)
        steps = round((pure_r[0] + pure_r[1]) / 2.0 / params.step)
        if _kernel_c is None:
            print(f"{length:8.1f}  {steps:9d}  {pure_t * 1e3:9.3f} ms"
                  f"  {'—':>12}  {'—':>8}")
            continue
        comp_t, comp_r = best_time(_kernel_c.simulate_core, call,
                                   args.repeats)
        if comp_r != pure_r:
            raise SystemExit(f"backends disagree at length {length}: "
                             f"{comp_r!r} != {pure_r!r}")
        speedups.append(pure_t / comp_t)
        print(f"{length:8.1f}  {steps:9d}  {pure_t * 1e3:9.3f} ms"
              f"  {comp_t * 1e3:9.3f} ms  {pure_t / comp_t:7.1f}x")

    if speedups:
        print()
        print(f"median speedup: {statistics.median(speedups):.1f}x "
              f"(results bit-identical on every case)")


if __name__ == "__main__":
    main()
