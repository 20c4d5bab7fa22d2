"""Benchmark the compiled subset-scan kernels against the numpy fallback.

Run from the repository root:

    python benchmarks/bench_kernels.py
    EFFDOM_NO_NUMBA=1 python benchmarks/bench_kernels.py   # fallback only

The compiled path and the numpy path are both importable whatever the
environment flag says, so a single default run times the two side by
side.  Under ``EFFDOM_NO_NUMBA=1`` the dispatching wrappers resolve to
the fallback and the table shows that configuration instead.
"""
from __future__ import annotations

import argparse
import random
import time

from effdom.graphs import WeightedGraph, square
from effdom.kernels import (
    USING_NUMBA,
    ed_scan,
    ed_scan_numpy,
    mwis_scan,
    mwis_scan_numpy,
)
from effdom.oracle import brute_force_wed


def _random_graph(rng: random.Random, n: int, p: float) -> WeightedGraph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    weights = tuple(rng.randint(1, 100) for _ in range(n))
    return WeightedGraph.from_edges(n, edges, weights)


def _masks(g: WeightedGraph, closed: bool):
    out = []
    for v in range(g.n):
        m = 1 << v if closed else 0
        for u in g.adj[v]:
            m |= 1 << u
        out.append(m)
    return out


def _time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+",
                    default=[16, 18, 20, 22])
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=20260822)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    label = "numba" if USING_NUMBA else "numpy (fallback forced)"
    print(f"dispatching backend: {label}")
    print(f"{'kernel':<12} {'n':>4} {'dispatch':>10} {'numpy':>10} "
          f"{'speedup':>8}")

    for n in args.sizes:
        g = _random_graph(rng, n, 0.25)
        closed = _masks(g, closed=True)
        openm = _masks(g, closed=False)
        full = (1 << n) - 1

        ed_scan(closed, g.weights, full, n)  # JIT warmup outside the clock
        t_fast = _time(lambda: ed_scan(closed, g.weights, full, n),
                       args.repeats)
        t_np = _time(lambda: ed_scan_numpy(closed, g.weights, full, n),
                     args.repeats)
        assert ed_scan(closed, g.weights, full, n) == \
            ed_scan_numpy(closed, g.weights, full, n)
        print(f"{'ed_scan':<12} {n:>4} {t_fast:>9.3f}s {t_np:>9.3f}s "
              f"{t_np / t_fast:>7.1f}x")

        mwis_scan(openm, g.weights, n)
        t_fast = _time(lambda: mwis_scan(openm, g.weights, n), args.repeats)
        t_np = _time(lambda: mwis_scan_numpy(openm, g.weights, n),
                     args.repeats)
        assert mwis_scan(openm, g.weights, n) == \
            mwis_scan_numpy(openm, g.weights, n)
        print(f"{'mwis_scan':<12} {n:>4} {t_fast:>9.3f}s {t_np:>9.3f}s "
              f"{t_np / t_fast:>7.1f}x")

    print()
    print("end-to-end oracle (brute_force_wed, dispatching backend):")
    for n in args.sizes:
        g = _random_graph(rng, n, 0.25)
        t = _time(lambda: brute_force_wed(g), args.repeats)
        print(f"  n={n:<3} {t:8.3f}s")

    print()
    print("square() on dense graphs (packed bitsets):")
    for n in (500, 1000, 2000):
        g = _random_graph(rng, n, 0.1)
        t = _time(lambda: square(g), args.repeats)
        print(f"  n={n:<5} m={g.m:<7} {t:8.3f}s")


if __name__ == "__main__":
    main()
