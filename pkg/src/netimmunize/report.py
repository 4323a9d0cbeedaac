"""CSV and SVG emission for benchmark runs.

CSV files carry '#'-prefixed provenance comment lines (run parameters, never
wall-clock times) before the header, so any figure can be reproduced from its
own file.  Timing columns are the only nondeterministic fields.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Sequence

import numpy as np

BENCH_COLUMNS = [
    "graph", "n", "m", "method", "k",
    "lambda_before", "lambda_after", "eigendrop", "eigendrop_pct",
    "select_ms", "eval_ms", "seed", "status", "selected",
]

TIMING_COLUMNS = ("select_ms", "eval_ms")

_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"]


def fnum(x: float | None) -> str:
    """Stable float formatting for CSV ('' for missing)."""
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return ""
    return "%.10g" % x


@dataclass
class BenchRecord:
    graph: str
    n: int
    m: int
    method: str
    k: int
    lambda_before: float | None
    lambda_after: float | None
    eigendrop: float | None
    eigendrop_pct: float | None
    select_ms: float | None
    eval_ms: float | None
    seed: int
    status: str = "ok"
    selected: Sequence[int] = ()

    def to_row(self) -> list[str]:
        return [
            self.graph, str(self.n), str(self.m), self.method, str(self.k),
            fnum(self.lambda_before), fnum(self.lambda_after),
            fnum(self.eigendrop), fnum(self.eigendrop_pct),
            fnum(self.select_ms), fnum(self.eval_ms),
            str(self.seed), self.status,
            ";".join(str(v) for v in self.selected),
        ]


def write_bench_csv(dest: str | Path | IO[str], records: Iterable[BenchRecord],
                    provenance: dict[str, object]) -> None:
    lines = [f"# {key}={value}" for key, value in provenance.items()]
    lines.append(",".join(BENCH_COLUMNS))
    lines += [",".join(r.to_row()) for r in records]
    text = "\n".join(lines) + "\n"
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8")


def write_walk_csv(dest: str | Path | IO[str], labels: Sequence[int], w: np.ndarray,
                   cw6: np.ndarray | None, provenance: dict[str, object]) -> None:
    """node_label,W rows (plus an exact cw6 column when provided)."""
    lines = [f"# {key}={value}" for key, value in provenance.items()]
    header = "node_label,W" + (",cw6" if cw6 is not None else "")
    lines.append(header)
    for i, lab in enumerate(labels):
        row = f"{lab},{fnum(float(w[i]))}"
        if cw6 is not None:
            row += f",{int(cw6[i])}"
        lines.append(row)
    text = "\n".join(lines) + "\n"
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8")


def render_sweep_svg(series: Sequence[tuple[str, Sequence[tuple[int, float]]]],
                     *, title: str = "eigendrop vs k") -> str:
    """Line chart (one polyline per method, x = k, y = eigendrop %)."""
    width, height = 640, 440
    left, right, top, bottom = 60, 160, 48, 56
    pw, ph = width - left - right, height - top - bottom

    ks = sorted({k for _, pts in series for k, _ in pts})
    if not ks:
        ks = [0, 1]
    kmin, kmax = min(ks), max(ks)
    if kmin == kmax:
        kmin, kmax = kmin - 1, kmax + 1
    ymax = max((pct for _, pts in series for _, pct in pts), default=1.0)
    ymax = max(ymax * 1.05, 1.0)

    def sx(k: float) -> float:
        return left + (k - kmin) / (kmax - kmin) * pw

    def sy(y: float) -> float:
        return top + ph - y / ymax * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{left + pw / 2:.1f}" y="24" text-anchor="middle" font-size="15">{title}</text>',
        f'<line x1="{left}" y1="{top + ph}" x2="{left + pw}" y2="{top + ph}" stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{top + ph}" stroke="black"/>',
    ]
    xticks = ks if len(ks) <= 12 else [round(kmin + i * (kmax - kmin) / 6) for i in range(7)]
    for k in xticks:
        x = sx(k)
        out.append(f'<line x1="{x:.2f}" y1="{top + ph}" x2="{x:.2f}" y2="{top + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{x:.2f}" y="{top + ph + 20}" text-anchor="middle">{k}</text>')
    for i in range(6):
        y = ymax * i / 5
        out.append(f'<line x1="{left - 5}" y1="{sy(y):.2f}" x2="{left}" y2="{sy(y):.2f}" stroke="black"/>')
        out.append(f'<text x="{left - 9}" y="{sy(y) + 4:.2f}" text-anchor="end">{y:.1f}</text>')
    out.append(f'<text x="{left + pw / 2:.1f}" y="{height - 12}" text-anchor="middle">immunized nodes k</text>')
    out.append(f'<text x="16" y="{top + ph / 2:.1f}" text-anchor="middle" '
               f'transform="rotate(-90 16 {top + ph / 2:.1f})">eigendrop %</text>')

    for idx, (method, pts) in enumerate(series):
        color = _PALETTE[idx % len(_PALETTE)]
        pts = sorted(pts)
        coords = " ".join(f"{sx(k):.2f},{sy(p):.2f}" for k, p in pts)
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="2" points="{coords}"/>')
        for k, p in pts:
            out.append(f'<circle cx="{sx(k):.2f}" cy="{sy(p):.2f}" r="3" fill="{color}"/>')
        ly = top + 16 * idx
        out.append(f'<rect x="{left + pw + 14}" y="{ly - 9}" width="12" height="12" fill="{color}"/>')
        out.append(f'<text x="{left + pw + 31}" y="{ly + 2}">{method}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
