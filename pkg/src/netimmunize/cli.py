"""Command-line surface: immunize / sweep / dump-walks / eigendrop."""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import report
from .graph import EdgeListParseError, Graph, LoadReport, load_edge_list
from .immunize import (ImmunizationResult, InfeasibleError, ScoreParams,
                       baseline_select, exhaustive_best_score, greedy1_baseline,
                       greedy_select)
from .sketch import default_alpha, estimate_walks
from .spectral import eigendrop
from .walks import SizeCapError, exact_cw6_all

METHODS = ("greedy-walk6", "greedy1", "degree", "random", "exhaustive")


@dataclass
class RunConfig:
    input: Path
    ks: list[int] = field(default_factory=lambda: [1])
    methods: list[str] = field(default_factory=lambda: ["greedy-walk6"])
    alpha: int | None = None
    beta: int = 5
    base_seed: int = 0
    gamma_mode: str = "k_times_max"
    one_indexed: bool = False
    out_csv: Path | None = None
    out_svg: Path | None = None
    exact: bool = False
    nodes: list[int] | None = None


def _parse_int_list(text: str) -> list[int]:
    """'1,2,5:8' -> [1, 2, 5, 6, 7, 8] (ranges are inclusive)."""
    out: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if ":" in token:
            lo, hi = token.split(":", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(token))
    if not out:
        raise ValueError(f"no values in {text!r}")
    return out


def _load(cfg: RunConfig) -> tuple[Graph, LoadReport]:
    g, rep = load_edge_list(cfg.input, one_indexed=cfg.one_indexed)
    print(f"loaded {cfg.input.stem}: n={g.n} m={g.m}")
    if not rep.clean:
        print(f"warning: dropped {rep.self_loops} self-loop(s) and "
              f"{rep.duplicates} duplicate edge(s)")
    if g.m == 0:
        print("warning: graph has no edges; eigendrop is 0 for every selection")
    return g, rep


def run_method(g: Graph, method: str, k: int, cfg: RunConfig) -> ImmunizationResult:
    if method == "greedy-walk6":
        return greedy_select(g, k, alpha=cfg.alpha, beta=cfg.beta,
                             base_seed=cfg.base_seed, gamma_mode=cfg.gamma_mode)
    if method == "greedy1":
        return greedy1_baseline(g, k)
    if method in ("degree", "random"):
        return baseline_select(g, k, method, seed=cfg.base_seed)
    if method == "exhaustive":
        t0 = time.perf_counter()
        W = estimate_walks(g, cfg.alpha if cfg.alpha is not None else default_alpha(g.n),
                           cfg.beta, cfg.base_seed)
        params = ScoreParams.resolve(W, k, cfg.gamma_mode)
        best_set, _ = exhaustive_best_score(g, W, k, params)
        select_s = time.perf_counter() - t0
        t0 = time.perf_counter()
        spectra = eigendrop(g, best_set)
        timings = {"select_s": select_s, "eval_s": time.perf_counter() - t0}
        labels = [int(g.labels[v]) for v in best_set]
        return ImmunizationResult(method=method, selected=[int(v) for v in best_set],
                                  selected_labels=labels, per_step=[], spectra=spectra,
                                  timings=timings, walk_estimates=W, params=params)
    raise ValueError(f"unknown method {method!r}")


def _record(g: Graph, name: str, method: str, k: int, cfg: RunConfig,
            result: ImmunizationResult | None, status: str = "ok") -> report.BenchRecord:
    if result is None or result.spectra is None:
        return report.BenchRecord(graph=name, n=g.n, m=g.m, method=method, k=k,
                                  lambda_before=None, lambda_after=None, eigendrop=None,
                                  eigendrop_pct=None, select_ms=None, eval_ms=None,
                                  seed=cfg.base_seed, status=status, selected=())
    sp = result.spectra
    select_ms = 1000.0 * (result.timings.get("estimate_s", 0.0) + result.timings.get("select_s", 0.0))
    eval_ms = 1000.0 * result.timings.get("eval_s", 0.0)
    return report.BenchRecord(graph=name, n=g.n, m=g.m, method=method, k=k,
                              lambda_before=sp.before, lambda_after=sp.after,
                              eigendrop=sp.drop, eigendrop_pct=sp.drop_pct,
                              select_ms=select_ms, eval_ms=eval_ms,
                              seed=cfg.base_seed, status=status,
                              selected=result.selected_labels)


def _provenance(cfg: RunConfig, g: Graph, command: str) -> dict[str, object]:
    return {
        "command": command,
        "input": cfg.input.name,
        "n": g.n,
        "m": g.m,
        "alpha": cfg.alpha if cfg.alpha is not None else f"auto({default_alpha(g.n)})",
        "beta": cfg.beta,
        "base_seed": cfg.base_seed,
        "gamma_mode": cfg.gamma_mode,
        "methods": "+".join(cfg.methods),
        "k": ",".join(str(k) for k in cfg.ks),
    }


def cmd_immunize(cfg: RunConfig) -> tuple[ImmunizationResult, report.BenchRecord]:
    g, _ = _load(cfg)
    method, k = cfg.methods[0], cfg.ks[0]
    result = run_method(g, method, k, cfg)
    rec = _record(g, cfg.input.stem, method, k, cfg, result)
    print(f"method={method} k={k} selected: " + " ".join(str(v) for v in result.selected_labels))
    sp = result.spectra
    if sp is not None:
        print(f"lambda_max {report.fnum(sp.before)} -> {report.fnum(sp.after)}; "
              f"eigendrop {report.fnum(sp.drop)} ({report.fnum(sp.drop_pct)}%)")
        if not sp.converged:
            print("warning: power iteration did not fully converge", file=sys.stderr)
    if cfg.out_csv:
        report.write_bench_csv(cfg.out_csv, [rec], _provenance(cfg, g, "immunize"))
        print(f"wrote {cfg.out_csv}")
    return result, rec


def cmd_sweep(cfg: RunConfig) -> list[report.BenchRecord]:
    g, _ = _load(cfg)
    records: list[report.BenchRecord] = []
    for method in cfg.methods:
        for k in sorted(cfg.ks):
            try:
                result = run_method(g, method, k, cfg)
                records.append(_record(g, cfg.input.stem, method, k, cfg, result))
            except (InfeasibleError, SizeCapError, OverflowError) as exc:
                # record the failure and keep sweeping
                records.append(_record(g, cfg.input.stem, method, k, cfg, None,
                                       status=f"failed: {exc}"))
    for rec in records:
        print(f"{rec.method:>14} k={rec.k:<3} "
              + (f"eigendrop_pct={report.fnum(rec.eigendrop_pct)}" if rec.status == "ok"
                 else rec.status))
    if cfg.out_csv:
        report.write_bench_csv(cfg.out_csv, records, _provenance(cfg, g, "sweep"))
        print(f"wrote {cfg.out_csv}")
    if cfg.out_svg:
        series = []
        for method in cfg.methods:
            pts = [(r.k, r.eigendrop_pct) for r in records
                   if r.method == method and r.status == "ok" and r.eigendrop_pct is not None]
            if pts:
                series.append((method, pts))
        Path(cfg.out_svg).write_text(
            report.render_sweep_svg(series, title=f"eigendrop vs k ({cfg.input.stem})"),
            encoding="utf-8")
        print(f"wrote {cfg.out_svg}")
    return records


def cmd_dump_walks(cfg: RunConfig) -> Path | None:
    g, _ = _load(cfg)
    alpha = cfg.alpha if cfg.alpha is not None else default_alpha(g.n)
    west = estimate_walks(g, alpha, cfg.beta, cfg.base_seed)
    cw6 = None
    prov = _provenance(cfg, g, "dump-walks")
    if cfg.exact:
        try:
            cw6 = exact_cw6_all(g)
            prov["exact"] = "true"
        except (SizeCapError, OverflowError) as exc:
            print(f"notice: exact counts unavailable ({exc}); writing estimates only",
                  file=sys.stderr)
            prov["exact"] = "unavailable"
    labels = [int(v) for v in g.labels]
    dest = cfg.out_csv
    if dest is None:
        report.write_walk_csv(sys.stdout, labels, west.W, cw6, prov)
        return None
    report.write_walk_csv(dest, labels, west.W, cw6, prov)
    print(f"wrote {dest}")
    return dest


def cmd_eigendrop(cfg: RunConfig) -> None:
    g, _ = _load(cfg)
    if not cfg.nodes:
        raise SystemExit("eigendrop requires --nodes with at least one label")
    label_to_id = {int(lab): i for i, lab in enumerate(g.labels)}
    try:
        ids = [label_to_id[v] for v in cfg.nodes]
    except KeyError as exc:
        raise SystemExit(f"unknown node label {exc.args[0]}") from None
    rep = eigendrop(g, ids)
    print(f"nodes: {' '.join(str(v) for v in cfg.nodes)}")
    print(f"lambda_max {report.fnum(rep.before)} -> {report.fnum(rep.after)}; "
          f"eigendrop {report.fnum(rep.drop)} ({report.fnum(rep.drop_pct)}%)")
    if not rep.converged:
        print("warning: power iteration did not fully converge", file=sys.stderr)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, type=Path, help="edge-list file")
    p.add_argument("--alpha", type=int, default=None,
                   help="summary buckets (default: max(16, ceil(sqrt(n))))")
    p.add_argument("--beta", type=int, default=5, help="hash functions to min over")
    p.add_argument("--seed", type=int, default=0, dest="base_seed", help="base RNG seed")
    p.add_argument("--gamma-mode", choices=["k_times_max", "max"], default="k_times_max")
    p.add_argument("--one-indexed", action="store_true",
                   help="input node ids start at 1 (ids are kept as labels either way)")
    p.add_argument("--out-csv", type=Path, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="netimmunize",
                                 description="budget-k node immunization toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("immunize", help="select k nodes with one method")
    _add_common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="greedy-walk6")

    p = sub.add_parser("sweep", help="eigendrop-vs-k grid over methods")
    _add_common(p)
    p.add_argument("--k-list", required=True, help="e.g. 1,2,3 or 1:8")
    p.add_argument("--methods", default="greedy-walk6,degree,random",
                   help="comma-separated subset of: " + ",".join(METHODS))
    p.add_argument("--out-svg", type=Path, default=None)

    p = sub.add_parser("dump-walks", help="per-node walk estimates as CSV")
    _add_common(p)
    p.add_argument("--exact", action="store_true",
                   help="also compute exact counts (dense; size-capped)")

    p = sub.add_parser("eigendrop", help="evaluate a user-supplied node list")
    _add_common(p)
    p.add_argument("--nodes", required=True, help="comma-separated node labels")
    return ap


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(input=args.input, alpha=args.alpha, beta=args.beta,
                    base_seed=args.base_seed, gamma_mode=args.gamma_mode,
                    one_indexed=args.one_indexed, out_csv=args.out_csv)
    if args.command == "immunize":
        cfg.ks = [args.k]
        cfg.methods = [args.method]
    elif args.command == "sweep":
        cfg.ks = _parse_int_list(args.k_list)
        cfg.methods = [m.strip() for m in args.methods.split(",") if m.strip()]
        for m in cfg.methods:
            if m not in METHODS:
                raise SystemExit(f"unknown method {m!r}; choose from {','.join(METHODS)}")
        cfg.out_svg = args.out_svg
    elif args.command == "dump-walks":
        cfg.exact = args.exact
    elif args.command == "eigendrop":
        cfg.nodes = _parse_int_list(args.nodes)
    return cfg


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = _config_from_args(args)
    try:
        if args.command == "immunize":
            cmd_immunize(cfg)
        elif args.command == "sweep":
            cmd_sweep(cfg)
        elif args.command == "dump-walks":
            cmd_dump_walks(cfg)
        elif args.command == "eigendrop":
            cmd_eigendrop(cfg)
    except EdgeListParseError as exc:
        print(f"error: {cfg.input}: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InfeasibleError, SizeCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
