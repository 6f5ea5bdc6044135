"""Matplotlib figures for benchmark reports (precision and runtime per solver).

Figures are built on ``matplotlib.figure.Figure`` directly, so no pyplot
state or interactive backend is involved.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from matplotlib.figure import Figure

from .bench import BenchReport, ErrorBucket

_BUCKET_COLORS = {
    ErrorBucket.EXACT: "#1b7837",
    ErrorBucket.AT_MOST_001_PCT: "#7fbf7b",
    ErrorBucket.AT_MOST_01_PCT: "#d9f0d3",
    ErrorBucket.AT_MOST_1_PCT: "#f1b6da",
    ErrorBucket.OVER_1_PCT: "#c51b7d",
}


def plot_precision(report: BenchReport, path: Union[str, Path]) -> None:
    """Stacked bars of error-bucket percentages, one bar per suite entry."""
    labels = [r.entry.label for r in report.rows]
    fig = Figure(figsize=(max(5.0, 1.1 * len(labels)), 4.0), layout="constrained")
    ax = fig.subplots()
    bottom = [0.0] * len(labels)
    for bucket in ErrorBucket:
        heights = [r.percentages[bucket] for r in report.rows]
        ax.bar(labels, heights, bottom=bottom, color=_BUCKET_COLORS[bucket], label=bucket.value,
               edgecolor="black", linewidth=0.4)
        bottom = [b + h for b, h in zip(bottom, heights)]
    ax.set_ylabel("instances (%)")
    ax.set_ylim(0, 100)
    ax.set_title(f"Radius error vs reference ({report.instances} polygons x {report.repeats})")
    ax.legend(loc="upper left", bbox_to_anchor=(1.0, 1.0), fontsize="small")
    ax.tick_params(axis="x", labelrotation=30)
    fig.savefig(path, dpi=120)


def plot_runtime(report: BenchReport, path: Union[str, Path]) -> None:
    labels = [r.entry.label for r in report.rows]
    fig = Figure(figsize=(max(5.0, 1.1 * len(labels)), 4.0), layout="constrained")
    ax = fig.subplots()
    ax.bar(labels, [r.median_runtime_us for r in report.rows], color="#4c72b0", label="median")
    ax.scatter(labels, [r.mean_runtime_us for r in report.rows], color="black", marker="_", s=200,
               zorder=3, label="mean")
    ax.set_yscale("log")
    ax.set_ylabel("wall-clock per solve (us)")
    ax.legend(fontsize="small")
    ax.tick_params(axis="x", labelrotation=30)
    fig.savefig(path, dpi=120)


def figure_paths(csv_path: Union[str, Path]) -> tuple[Path, Path]:
    """PNG paths written next to a CSV report."""
    p = Path(csv_path)
    return p.with_name(p.stem + "_precision.png"), p.with_name(p.stem + "_runtime.png")
