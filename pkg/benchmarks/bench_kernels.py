"""Benchmark the compiled kernels against the pure-Python/numpy fallback.

Run:
    python3 benchmarks/bench_kernels.py [--trials 1000000] [--n 3]

Both backends are timed on identical draws and must return identical counts;
the table reports throughput in intervals per second.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from bufrelay.sim import _kernels_py

try:
    from bufrelay.sim import _kernels_cy
except ImportError:
    _kernels_cy = None


def _chain_state(n: int, capacity: int, total_full: int):
    base, extra = divmod(total_full, n)
    occ = np.array([base + 1 if i < extra else base for i in range(n)], dtype=np.int64)
    queue = np.zeros((n, capacity), dtype=np.int64)
    for i in range(n):
        queue[i, : occ[i]] = -1
    qhead = np.zeros(n, dtype=np.int64)
    return occ, queue, qhead


def bench(trials: int, n: int) -> None:
    rng = np.random.default_rng(0)
    mean = 31.62  # 15 dB
    g = rng.standard_exponential((trials, n)) * mean
    h = rng.standard_exponential((trials, n)) * mean
    threshold = 3.0
    capacity, total_full = 30, min(-(-n * 30 // 2), n * 29)

    backends = [("python", _kernels_py)]
    if _kernels_cy is not None:
        backends.append(("cython", _kernels_cy))
    else:
        print("compiled extension not available; benchmarking fallback only")

    cases = {
        "count_brs_outages": lambda k: k.count_brs_outages(g, h, threshold),
        "count_mmrs_outages": lambda k: k.count_mmrs_outages(g, h, threshold),
    }

    print(f"{trials} trials, N={n}")
    print(f"{'kernel':<22}{'backend':<10}{'seconds':>10}{'M intervals/s':>16}")
    results: dict[tuple[str, str], int] = {}
    timings: dict[tuple[str, str], float] = {}
    for name, call in cases.items():
        for bname, k in backends:
            t0 = time.perf_counter()
            value = call(k)
            dt = time.perf_counter() - t0
            results[(name, bname)] = value
            timings[(name, bname)] = dt
            print(f"{name:<22}{bname:<10}{dt:>10.3f}{trials / dt / 1e6:>16.1f}")

    name = "hrs_block"
    visits = np.zeros(1, dtype=np.int64)
    for bname, k in backends:
        occ, queue, qhead = _chain_state(n, capacity, total_full)
        t0 = time.perf_counter()
        value = k.hrs_block(
            g, h, threshold, capacity, occ, queue, qhead, 0, False, visits, False, 0
        )
        dt = time.perf_counter() - t0
        results[(name, bname)] = value
        timings[(name, bname)] = dt
        print(f"{name:<22}{bname:<10}{dt:>10.3f}{trials / dt / 1e6:>16.1f}")

    if _kernels_cy is not None:
        for name in ("count_brs_outages", "count_mmrs_outages", "hrs_block"):
            assert results[(name, "python")] == results[(name, "cython")], name
            speedup = timings[(name, "python")] / timings[(name, "cython")]
            print(f"{name}: backends agree, cython speedup x{speedup:.1f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=1_000_000)
    ap.add_argument("--n", type=int, default=3)
    args = ap.parse_args()
    bench(args.trials, args.n)
