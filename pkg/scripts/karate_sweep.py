#!/usr/bin/env python3
"""Eigendrop-vs-k comparison on the karate graph.

Runs greedy-walk6 against the exact eigendrop greedy, top-degree, and a
random baseline averaged over several seeds, then writes a CSV and an SVG
line chart under results/.
"""

from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np

from netimmunize import (baseline_select, greedy1_baseline, greedy_select,
                         load_edge_list)
from netimmunize.report import BenchRecord, render_sweep_svg, write_bench_csv

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--input", type=Path, default=ROOT / "data" / "karate.edges")
    ap.add_argument("--k-max", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--random-repeats", type=int, default=20)
    ap.add_argument("--out-dir", type=Path, default=ROOT / "results")
    args = ap.parse_args()

    g, _ = load_edge_list(args.input, one_indexed=True)
    print(f"{args.input.name}: n={g.n} m={g.m}")
    args.out_dir.mkdir(parents=True, exist_ok=True)

    ks = list(range(1, args.k_max + 1))
    records: list[BenchRecord] = []
    series: list[tuple[str, list[tuple[int, float]]]] = []

    def record(method: str, k: int, pct: float, before: float, after: float,
               selected) -> None:
        records.append(BenchRecord(
            graph=args.input.stem, n=g.n, m=g.m, method=method, k=k,
            lambda_before=before, lambda_after=after, eigendrop=before - after,
            eigendrop_pct=pct, select_ms=None, eval_ms=None, seed=args.seed,
            selected=selected))

    for method in ("greedy-walk6", "greedy1", "degree"):
        pts = []
        for k in ks:
            if method == "greedy-walk6":
                res = greedy_select(g, k, base_seed=args.seed)
            elif method == "greedy1":
                res = greedy1_baseline(g, k)
            else:
                res = baseline_select(g, k, "degree")
            sp = res.spectra
            record(method, k, sp.drop_pct, sp.before, sp.after, res.selected_labels)
            pts.append((k, sp.drop_pct))
            print(f"{method:>13} k={k}  eigendrop_pct={sp.drop_pct:6.2f}  "
                  f"selected={res.selected_labels}")
        series.append((method, pts))

    pts = []
    for k in ks:
        drops = [baseline_select(g, k, "random", seed=args.seed + r).spectra.drop_pct
                 for r in range(args.random_repeats)]
        mean_pct = float(np.mean(drops))
        record(f"random(mean of {args.random_repeats})", k, mean_pct, np.nan, np.nan, ())
        pts.append((k, mean_pct))
        print(f"{'random-mean':>13} k={k}  eigendrop_pct={mean_pct:6.2f}")
    series.append(("random (mean)", pts))

    csv_path = args.out_dir / "karate_sweep.csv"
    svg_path = args.out_dir / "karate_sweep.svg"
    write_bench_csv(csv_path, records, {
        "command": "scripts/karate_sweep.py", "input": args.input.name,
        "n": g.n, "m": g.m, "base_seed": args.seed,
        "random_repeats": args.random_repeats,
    })
    svg_path.write_text(render_sweep_svg(series, title="eigendrop vs k (karate)"),
                        encoding="utf-8")
    print(f"wrote {csv_path} and {svg_path}")


if __name__ == "__main__":
    main()
