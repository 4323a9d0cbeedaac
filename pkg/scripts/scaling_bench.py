#!/usr/bin/env python3
"""Scaling measurements for the sketch estimator on a synthetic sparse graph.

Times estimate_walks across alpha, the alpha-doubling behavior of the
summary-power step (expected ~8x per doubling, it is cubic in alpha), and the
end-to-end greedy pipeline at k=50.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from netimmunize import Graph, build_partition, build_summary, estimate_walks, greedy_select


def random_gnm(rng: np.random.Generator, n: int, m: int) -> Graph:
    seen: set[tuple[int, int]] = set()
    while len(seen) < m:
        u, v = rng.integers(0, n, size=2)
        if u != v:
            seen.add((min(int(u), int(v)), max(int(u), int(v))))
    return Graph.from_edges(n, sorted(seen))


def power_time(c: np.ndarray, reps: int) -> float:
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        c2 = c @ c
        c3 = c2 @ c
        cf2, cf3 = c2.astype(np.float64), c3.astype(np.float64)
        np.einsum("ij,ij->i", cf2, cf2)
        np.einsum("ij,ij->i", cf3, cf3)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=10_000)
    ap.add_argument("--m", type=int, default=22_000)
    ap.add_argument("--beta", type=int, default=5)
    ap.add_argument("--seed", type=int, default=2026)
    ap.add_argument("--reps", type=int, default=9)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    g = random_gnm(rng, args.n, args.m)
    print(f"synthetic graph: n={g.n} m={g.m}")

    print("\nestimate_walks wall time:")
    for alpha in (32, 64, 128, 256):
        t0 = time.perf_counter()
        estimate_walks(g, alpha, args.beta, args.seed)
        print(f"  alpha={alpha:4d} beta={args.beta}: {time.perf_counter() - t0:7.3f}s")

    print("\nsummary-power step (min over repeats):")
    prev = None
    for alpha in (64, 128, 256):
        c = build_summary(g, build_partition(g, alpha, 1)).c
        t = power_time(c, args.reps)
        note = f"  ({t / prev:4.1f}x over half size)" if prev else ""
        print(f"  alpha={alpha:4d}: {t * 1000:9.3f} ms{note}")
        prev = t

    t0 = time.perf_counter()
    res = greedy_select(g, 50, alpha=128, beta=args.beta, base_seed=args.seed)
    dt = time.perf_counter() - t0
    sp = res.spectra
    print(f"\nfull greedy pipeline k=50: {dt:.2f}s  "
          f"lambda {sp.before:.4f} -> {sp.after:.4f} ({sp.drop_pct:.2f}%)")


if __name__ == "__main__":
    main()
