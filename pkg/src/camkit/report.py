"""Optional file reports: delimited findings plus rendered figures.

Every figure ships with a sibling ``.txt`` alt-text file generated by the
toolkit's own bar descriptor, so the reports practice what the tool
preaches.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .audit import AccessibilityStatus, ScreenAudit
from .descriptors import BarChartDescriptor, CategoricalSeries

_STATUS_ORDER = [status.value for status in AccessibilityStatus]


def _status_counts(audits: Sequence[ScreenAudit]) -> dict[str, int]:
    counts = {name: 0 for name in _STATUS_ORDER}
    for audit in audits:
        for _, status in audit.candidates:
            counts[status.value] += 1
    return counts


def _figure_alt_text(labels: Sequence[str], values: Sequence[float], title: str) -> str:
    series = CategoricalSeries(
        labels=tuple(labels),
        values=tuple(values),
        category_title="finding",
        value_title="screens" if "confusion" in title.lower() else "charts",
        chart_title=title,
    )
    return BarChartDescriptor(series).describe()


def write_audit_report(audits: Sequence[ScreenAudit], out_dir: str | Path) -> list[Path]:
    """Write screens.csv plus a status-breakdown figure with alt text."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    csv_path = out_dir / "screens.csv"
    with csv_path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(
            ["file", "has_chart", "class_name", "resource_id", "bounds", "status", "reason"]
        )
        for audit in sorted(audits, key=lambda a: a.source_file):
            if not audit.candidates:
                writer.writerow([audit.source_file, "n", "", "", "", "", ""])
                continue
            for candidate, status in audit.candidates:
                b = candidate.node.bounds
                writer.writerow(
                    [
                        audit.source_file,
                        "y",
                        candidate.node.class_name,
                        candidate.node.resource_id,
                        f"[{b.left},{b.top}][{b.right},{b.bottom}]",
                        status.value,
                        candidate.reason,
                    ]
                )
    written.append(csv_path)

    counts = _status_counts(audits)
    labels = list(counts)
    values = [counts[name] for name in labels]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(labels, values, color=["#2a9d8f", "#e9c46a", "#e76f51"])
    ax.set_ylabel("charts")
    ax.set_title("Chart accessibility status")
    fig.tight_layout()
    figure_path = out_dir / "accessibility_status.png"
    fig.savefig(figure_path, dpi=150)
    plt.close(fig)
    written.append(figure_path)

    if any(values):
        alt_path = figure_path.with_suffix(".txt")
        alt_path.write_text(
            _figure_alt_text(labels, values, "Chart accessibility status") + "\n",
            encoding="utf-8",
        )
        written.append(alt_path)
    return written


def write_eval_report(metrics: dict, out_dir: str | Path) -> list[Path]:
    """Write metrics.csv plus a confusion-matrix figure with alt text."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    presence = metrics["chart_presence"]
    csv_path = out_dir / "metrics.csv"
    with csv_path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        fields = ["tp", "fp", "fn", "tn", "accuracy", "precision", "recall"]
        writer.writerow(fields)
        writer.writerow(["" if presence[f] is None else presence[f] for f in fields])
    written.append(csv_path)

    grid = [[presence["tp"], presence["fn"]], [presence["fp"], presence["tn"]]]
    fig, ax = plt.subplots(figsize=(4.5, 4))
    image = ax.imshow(grid, cmap="Blues")
    ax.set_xticks([0, 1], labels=["predicted chart", "predicted no chart"])
    ax.set_yticks([0, 1], labels=["labeled chart", "labeled no chart"])
    for row in (0, 1):
        for col in (0, 1):
            ax.text(col, row, str(grid[row][col]), ha="center", va="center")
    ax.set_title("Chart presence confusion matrix")
    fig.colorbar(image, ax=ax, shrink=0.8)
    fig.tight_layout()
    figure_path = out_dir / "confusion_matrix.png"
    fig.savefig(figure_path, dpi=150)
    plt.close(fig)
    written.append(figure_path)

    counts = [presence["tp"], presence["fp"], presence["fn"], presence["tn"]]
    if any(counts):
        alt_path = figure_path.with_suffix(".txt")
        alt_path.write_text(
            _figure_alt_text(
                ["true positive", "false positive", "false negative", "true negative"],
                counts,
                "Chart presence confusion matrix",
            )
            + "\n",
            encoding="utf-8",
        )
        written.append(alt_path)
    return written
