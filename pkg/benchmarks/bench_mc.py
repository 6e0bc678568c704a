#!/usr/bin/env python3
"""Benchmark the simulator's numba kernel against the pure-numpy fallback.

Runs identical simulations on both backends across a few population sizes
and serial depths, checks the reports agree exactly, and prints a timing
table. The numba path pays a one-time JIT compile on first call which is
excluded via a warmup run.

Usage: python3 benchmarks/bench_mc.py [--trials N ...]
"""

import argparse
import time

from seqscreen import Prior, SimulationConfig, TestProfile, simulate
from seqscreen._kernels import HAS_NUMBA


def best_of(fn, repeats=3):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--trials", type=int, nargs="+", default=[100_000, 1_000_000, 4_000_000]
    )
    parser.add_argument("--depths", type=int, nargs="+", default=[3, 10])
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if not HAS_NUMBA:
        print("numba not importable; only the numpy path is available")
        return 1

    test, prior = TestProfile(0.80, 0.85), Prior(0.10)
    # warmup: trigger JIT compilation outside the timed region
    simulate(SimulationConfig(test, prior, trials=1000, seed=0, serial_depth=3), backend="numba")

    print(f"{'trials':>10} {'depth':>6} {'numpy (s)':>10} {'numba (s)':>10} {'speedup':>8}")
    for depth in args.depths:
        for trials in args.trials:
            config = SimulationConfig(test, prior, trials=trials, seed=11, serial_depth=depth)
            report_np = simulate(config, backend="numpy")
            report_nb = simulate(config, backend="numba")
            assert report_np == report_nb, "backends disagree"
            t_np = best_of(lambda: simulate(config, backend="numpy"), args.repeats)
            t_nb = best_of(lambda: simulate(config, backend="numba"), args.repeats)
            print(
                f"{trials:>10} {depth:>6} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>7.1f}x"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
