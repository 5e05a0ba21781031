"""Matplotlib figures for census reports, written next to the delimited output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .counting import CountReport


def class_slug(text: str) -> str:
    """Filesystem-safe name for a class descriptor, e.g. ``I:4321,132`` -> ``I_4321-132``."""
    return text.replace(":", "_").replace(",", "-").rstrip("_")


def save_count_figure(report: CountReport, out_path: str | Path) -> Path:
    """Plot observed (and expected, where present) counts against n."""
    out_path = Path(out_path)
    ns = [row.n for row in report.rows]
    observed = [row.observed for row in report.rows]
    fig, ax = plt.subplots(figsize=(6, 4), dpi=100)
    ax.plot(ns, observed, marker="o", color="#1f77b4", label="observed")
    expected_pts = [(row.n, row.expected) for row in report.rows if row.expected is not None]
    if expected_pts:
        ax.plot(
            [p[0] for p in expected_pts],
            [p[1] for p in expected_pts],
            linestyle="none",
            marker="s",
            markerfacecolor="none",
            color="#d62728",
            label="expected",
        )
    ax.set_xlabel("n")
    ax.set_ylabel("count")
    ax.set_title(f"{report.descriptor.text()} counts")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_path)
    plt.close(fig)
    return out_path
