"""Benchmark report figures, rendered headless to image files."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .bench import BenchmarkReport  # noqa: E402


def render_correlation_figure(reports: Sequence[BenchmarkReport],
                              path) -> Path:
    """Bar chart of per-method correlations for one dataset.

    Reports must all belong to the same dataset; undefined correlations
    show as missing bars.
    """
    if not reports:
        raise ValueError("nothing to plot")
    datasets = {r.dataset for r in reports}
    if len(datasets) != 1:
        raise ValueError(f"mixed datasets in one figure: {sorted(datasets)}")
    methods = [r.method for r in reports]
    xs = range(len(reports))
    width = 0.38
    fig, ax = plt.subplots(figsize=(max(6.0, 0.5 * len(reports)), 4.0))
    ax.bar([x - width / 2 for x in xs],
           [r.spearman if r.spearman is not None else 0.0 for r in reports],
           width, label="Spearman", color="#4878d0")
    have_pearson = any(r.pearson is not None for r in reports)
    if have_pearson:
        ax.bar([x + width / 2 for x in xs],
               [r.pearson if r.pearson is not None else 0.0 for r in reports],
               width, label="Pearson", color="#ee854a")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(methods, rotation=60, ha="right", fontsize=7)
    ax.set_ylim(-1.0, 1.0)
    ax.axhline(0.0, color="gray", linewidth=0.6)
    ax.set_ylabel("correlation vs gold")
    ax.set_title(reports[0].dataset)
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out
