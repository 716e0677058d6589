"""Figure rendering from experiment CSVs.

Styles follow the source experiments: log-log error-versus-n panels with
2-SEM error bars and dashed reference lines at slopes -1/2 (black) and
-1/4 (gray) anchored at the first plotted point; error-versus-dimension
panels with a sqrt(k) guide and a vertical line at the true rank; plus
semicircle error curves and delocalization profiles.

Rendering is a pure function of the CSV and the spec: SVG output has a
fixed hash salt and no date metadata, so repeated runs are byte-identical.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .reader import (
    SchemaError,
    group_stats,
    read_deloc_profile,
    read_semicircle_curve,
    read_trials,
)

FIGURE_KINDS = ("error_vs_n", "error_vs_dim", "semicircle_curve", "deloc_profile")

matplotlib.rcParams["svg.hashsalt"] = "misspec-figures"


@dataclass(frozen=True)
class FigureSpec:
    csv_path: str
    kind: str
    output_path: str
    facet_keys: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in FIGURE_KINDS:
            raise ValueError(f"unknown figure kind {self.kind!r}; expected one of {FIGURE_KINDS}")


@dataclass(frozen=True)
class RenderResult:
    """Output path plus the per-series slope annotations drawn on the figure."""

    path: str
    slopes: Dict[Tuple, float] = field(default_factory=dict)


def _fit_slope(xs: Sequence[float], ys: Sequence[float]) -> Optional[float]:
    if len(xs) < 2:
        return None
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])


def _series_label(facet_keys: Tuple[str, ...], key: Tuple, slope: Optional[float]) -> str:
    parts = [f"{k}={v}" for k, v in zip(facet_keys, key)]
    if slope is not None:
        parts.append(f"slope {slope:.3f}")
    return ", ".join(parts)


def _save(fig, path: str) -> None:
    fig.savefig(path, metadata={"Date": None} if path.endswith(".svg") else None)
    plt.close(fig)


def _render_error_vs_n(spec: FigureSpec) -> RenderResult:
    facets = spec.facet_keys or ("d",)
    rows = read_trials(spec.csv_path)
    series = group_stats(rows, facets, x_key="n")
    if not series:
        raise SchemaError("no plottable conditions in the CSV")

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    slopes: Dict[Tuple, float] = {}
    anchor = None
    for key, stats in series.items():
        xs = [s.x for s in stats]
        ys = [s.mean for s in stats]
        bars = [0.0 if s.errbar is None else s.errbar for s in stats]
        slope = _fit_slope(xs, ys)
        if slope is not None:
            slopes[key] = slope
        ax.errorbar(xs, ys, yerr=bars, marker="o", capsize=3,
                    label=_series_label(facets, key, slope))
        if anchor is None:
            anchor = (xs[0], ys[0])

    x0, y0 = anchor
    grid = np.array([min(s.x for st in series.values() for s in st),
                     max(s.x for st in series.values() for s in st)])
    ax.plot(grid, y0 * (grid / x0) ** -0.5, "k--", linewidth=1, label="slope -1/2")
    ax.plot(grid, y0 * (grid / x0) ** -0.25, "--", color="gray", linewidth=1, label="slope -1/4")

    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("number of vertices n")
    ax.set_ylabel("row-wise (2,inf) error")
    ax.legend(fontsize=8)
    _save(fig, spec.output_path)
    return RenderResult(path=spec.output_path, slopes=slopes)


def _render_error_vs_dim(spec: FigureSpec) -> RenderResult:
    facets = spec.facet_keys or ("n",)
    rows = read_trials(spec.csv_path)
    series = group_stats(rows, facets, x_key="d")
    if not series:
        raise SchemaError("no plottable conditions in the CSV")
    true_rank = rows[0]["r"]

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    slopes: Dict[Tuple, float] = {}
    anchor = None
    for key, stats in series.items():
        xs = [s.x for s in stats]
        ys = [s.mean for s in stats]
        bars = [0.0 if s.errbar is None else s.errbar for s in stats]
        over = [(s.x - true_rank, s.mean) for s in stats if s.x > true_rank]
        slope = _fit_slope([k for k, _ in over], [e for _, e in over]) if len(over) >= 2 else None
        if slope is not None:
            slopes[key] = slope
        ax.errorbar(xs, ys, yerr=bars, marker="o", capsize=3,
                    label=_series_label(facets, key, slope))
        if anchor is None and over:
            anchor = over[0]

    if anchor is not None:
        k0, y0 = anchor
        ks = np.linspace(max(k0, 1), max(s.x for st in series.values() for s in st) - true_rank, 50)
        ax.plot(ks + true_rank, y0 * np.sqrt(ks / k0), "k--", linewidth=1, label="sqrt(k)")
    ax.axvline(true_rank, color="black", linewidth=1)

    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("embedding dimension d")
    ax.set_ylabel("row-wise (2,inf) error")
    ax.legend(fontsize=8)
    _save(fig, spec.output_path)
    return RenderResult(path=spec.output_path, slopes=slopes)


def _render_semicircle_curve(spec: FigureSpec) -> RenderResult:
    rows = read_semicircle_curve(spec.csv_path)
    if not rows:
        raise SchemaError("no plottable conditions in the CSV")
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    ax.plot([r["E"] for r in rows], [r["abs_err"] for r in rows], marker=".")
    ax.set_xlabel("E")
    ax.set_ylabel("|m_emp - m_sc|")
    ax.set_title(f"eta = {rows[0]['eta']:g}")
    _save(fig, spec.output_path)
    return RenderResult(path=spec.output_path)


def _render_deloc_profile(spec: FigureSpec) -> RenderResult:
    rows = read_deloc_profile(spec.csv_path)
    if not rows:
        raise SchemaError("no plottable conditions in the CSV")
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    ax.plot([r["position"] for r in rows], [r["max_abs_entry"] for r in rows], marker="o")
    ax.set_xlabel("eigenvector position (nonincreasing eigenvalue order)")
    ax.set_ylabel("max |entry|")
    ax.set_ylim(bottom=0)
    _save(fig, spec.output_path)
    return RenderResult(path=spec.output_path)


_RENDERERS = {
    "error_vs_n": _render_error_vs_n,
    "error_vs_dim": _render_error_vs_dim,
    "semicircle_curve": _render_semicircle_curve,
    "deloc_profile": _render_deloc_profile,
}


def render(spec: FigureSpec) -> RenderResult:
    """Render one figure; no file is written when the input is unusable."""
    if not os.path.exists(spec.csv_path):
        raise FileNotFoundError(spec.csv_path)
    return _RENDERERS[spec.kind](spec)
