"""CSV emission and dependency-free SVG line charts for experiment results."""

from __future__ import annotations

import csv
import math
from pathlib import Path
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

from .experiments import REGIMES, HeatmapRow, RobustnessReport, SweepRow
from .metrics import MetricRow

SCHEMAS = {
    "sweep": ["regime", "K_A", *MetricRow.field_names()],
    "heatmap": ["beta", "delta", "gini_managers", "output"],
    "robustness": ["alpha", "regime", "mgr_gini", "gap", "employed",
                   "check1", "check2", "check3", "check4", "check5"],
}

# grid coordinates keep their exact decimal spelling; measurements get 6 significant digits
_COORDS = {"K_A", "beta", "delta", "alpha"}


def fmt(value, column: str = "") -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if column in _COORDS:
            return repr(round(value, 10))
        return format(value, ".6g")
    return str(value)


def sweep_records(rows: Iterable[SweepRow]) -> list[dict]:
    out = []
    for r in rows:
        rec = {"regime": r.regime, "K_A": r.K_A}
        rec.update({k: getattr(r.metrics, k) for k in MetricRow.field_names()})
        out.append(rec)
    return out


def heatmap_records(rows: Iterable[HeatmapRow]) -> list[dict]:
    return [{"beta": r.beta, "delta": r.delta, "gini_managers": r.gini_managers, "output": r.output} for r in rows]


def robustness_records(report: RobustnessReport) -> list[dict]:
    out = []
    for r in report.rows:
        rec = {"alpha": r.alpha, "regime": r.regime, "mgr_gini": r.mgr_gini, "gap": r.gap, "employed": r.employed}
        rec.update({f"check{i + 1}": ok for i, ok in enumerate(report.checks[r.alpha])})
        out.append(rec)
    return out


def write_csv(records: Sequence[dict], schema: str, path) -> Path:
    """Write ``records`` under the named schema's exact header, LF line endings."""
    header = SCHEMAS[schema]
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            for rec in records:
                if set(rec) != set(header):
                    raise ValueError(f"record keys {sorted(rec)} do not match schema {schema!r}")
                w.writerow([fmt(rec[c], c) for c in header])
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc
    return path


# -- SVG ---------------------------------------------------------------------

_COLORS = ("#1b9e77", "#d95f02", "#7570b3", "#e7298a")
_DASHES = ("none", "8 4", "2 3", "10 3 2 3")
_W, _H = 720, 440
_L, _R, _T, _B = 70, 190, 40, 55

METRIC_LABELS = {
    "output": "Output",
    "output_index": "Output index",
    "gini_economy": "Economy Gini",
    "gini_managers": "Manager Gini",
    "gap": "Manager-worker wage gap",
    "top10_share": "Top-10% income share",
    "unemployment": "Unemployment rate",
    "employed": "Employed workers",
}


def nice_ticks(lo: float, hi: float, target: int = 5) -> list[float]:
    if hi <= lo:
        lo, hi = lo - 0.5, hi + 0.5
    raw = (hi - lo) / target
    mag = 10 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    start = math.ceil(lo / step - 1e-9) * step
    ticks = []
    t = start
    while t <= hi + step * 1e-9:
        ticks.append(round(t, 10))
        t += step
    return ticks


def _tick_label(v: float) -> str:
    return format(v, ".4g")


def render_sweep_svg(rows: Sequence[SweepRow], metric: str, path) -> Path:
    """One line per regime of ``metric`` against K_A, written as standalone SVG."""
    if metric not in MetricRow.field_names():
        raise ValueError(f"unknown metric {metric!r}")
    order = [r.name for r in REGIMES]
    series: dict[str, list[tuple[float, float]]] = {}
    for r in rows:
        series.setdefault(r.regime, []).append((r.K_A, float(getattr(r.metrics, metric))))
    names = [n for n in order if n in series] + [n for n in series if n not in order]

    pts = [p for s in series.values() for p in s if math.isfinite(p[1])]
    xs = [p[0] for p in pts] or [0.0]
    ys = [p[1] for p in pts] or [0.0]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x0, x1 = x0 - 0.5, x1 + 0.5
    if y1 == y0:
        pad = abs(y0) * 0.1 or 0.5
        y0, y1 = y0 - pad, y1 + pad
    pw, ph = _W - _L - _R, _H - _T - _B

    def sx(x: float) -> float:
        return _L + (x - x0) / (x1 - x0) * pw

    def sy(y: float) -> float:
        return _T + ph - (y - y0) / (y1 - y0) * ph

    label = METRIC_LABELS.get(metric, metric)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" viewBox="0 0 {_W} {_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W / 2:.1f}" y="22" text-anchor="middle" font-family="sans-serif" font-size="15">'
        f"{escape(label)} by agent capital</text>",
        f'<line x1="{_L}" y1="{_T + ph}" x2="{_L + pw}" y2="{_T + ph}" stroke="black"/>',
        f'<line x1="{_L}" y1="{_T}" x2="{_L}" y2="{_T + ph}" stroke="black"/>',
    ]
    for t in nice_ticks(x0, x1):
        if x0 <= t <= x1:
            x = sx(t)
            out.append(f'<line x1="{x:.2f}" y1="{_T + ph}" x2="{x:.2f}" y2="{_T + ph + 5}" stroke="black"/>')
            out.append(f'<text x="{x:.2f}" y="{_T + ph + 18}" text-anchor="middle" '
                       f'font-family="sans-serif" font-size="11">{_tick_label(t)}</text>')
    for t in nice_ticks(y0, y1):
        if y0 <= t <= y1:
            y = sy(t)
            out.append(f'<line x1="{_L - 5}" y1="{y:.2f}" x2="{_L + pw}" y2="{y:.2f}" stroke="#dddddd"/>')
            out.append(f'<text x="{_L - 8}" y="{y + 4:.2f}" text-anchor="end" '
                       f'font-family="sans-serif" font-size="11">{_tick_label(t)}</text>')
    out.append(f'<text x="{_L + pw / 2:.1f}" y="{_H - 12}" text-anchor="middle" '
               f'font-family="sans-serif" font-size="12">K_A (agent capital)</text>')
    out.append(f'<text x="16" y="{_T + ph / 2:.1f}" text-anchor="middle" font-family="sans-serif" '
               f'font-size="12" transform="rotate(-90 16 {_T + ph / 2:.1f})">{escape(label)}</text>')

    for k, name in enumerate(names):
        color, dash = _COLORS[k % len(_COLORS)], _DASHES[k % len(_DASHES)]
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in series[name] if math.isfinite(y))
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="2" '
                   f'stroke-dasharray="{dash}" points="{coords}"/>')
        for x, y in series[name]:
            if math.isfinite(y) and float(x).is_integer():
                out.append(f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="2.5" fill="{color}"/>')
        ly = _T + 14 + 20 * k
        lx = _L + pw + 16
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 28}" y2="{ly}" stroke="{color}" '
                   f'stroke-width="2" stroke-dasharray="{dash}"/>')
        out.append(f'<text x="{lx + 34}" y="{ly + 4}" font-family="sans-serif" font-size="11">'
                   f"{escape(name)}</text>")
    out.append("</svg>")

    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("\n".join(out) + "\n", encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc
    return path
