"""Chart detection and accessibility auditing over parsed view hierarchies.

The detection heuristic: a node hosts a chart when its class is one of the
generic custom-view hosts and its resource-id mentions "chart". A node is
accessible when it is focusable or carries a content description. Corpus
scoring compares audit verdicts against hand-labeled truth.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_UP
from enum import Enum
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .hierarchy import Bounds, UiNode, walk

CHART_HOST_CLASSES = frozenset({"View", "ViewGroup", "SurfaceView", "FrameLayout"})

DEFAULT_PROXIMITY_PX = 120

_CHART_TYPE_CODES = {"l": "line", "b": "bar", "p": "pie"}

LABELS_CSV_HEADER = ["file", "has_chart", "chart_type", "accessible"]


class AccessibilityStatus(Enum):
    FOCUSABLE_CHART = "FocusableChart"
    NEARBY_TEXT_DESCRIPTION = "NearbyTextDescription"
    INACCESSIBLE = "Inaccessible"


@dataclass(frozen=True)
class ChartCandidate:
    """A node the heuristic flagged, with the clause that matched."""

    node: UiNode
    reason: str


@dataclass(frozen=True)
class ScreenAudit:
    """Findings for one screen: every chart candidate and its status."""

    source_file: str
    candidates: tuple[tuple[ChartCandidate, AccessibilityStatus], ...]

    @property
    def has_chart(self) -> bool:
        return bool(self.candidates)


@dataclass(frozen=True)
class CorpusLabel:
    """Hand-assigned truth for one screen."""

    source_file: str
    has_chart: bool
    chart_type: Optional[str] = None
    accessible: Optional[bool] = None

    def __post_init__(self) -> None:
        if not self.has_chart and (self.chart_type is not None or self.accessible is not None):
            raise ValueError(
                f"{self.source_file}: chart_type/accessible only apply when has_chart"
            )
        if self.chart_type is not None and self.chart_type not in _CHART_TYPE_CODES.values():
            raise ValueError(f"{self.source_file}: unknown chart_type {self.chart_type!r}")


@dataclass(frozen=True)
class EvalMetrics:
    """Chart-presence confusion counts with derived rates.

    Rates with a zero denominator are reported as None, never as 0 or 1.
    """

    tp: int
    fp: int
    fn: int
    tn: int
    accuracy: Optional[float]
    precision: Optional[float]
    recall: Optional[float]

    @classmethod
    def from_counts(cls, tp: int, fp: int, fn: int, tn: int) -> "EvalMetrics":
        total = tp + fp + fn + tn
        return cls(
            tp=tp,
            fp=fp,
            fn=fn,
            tn=tn,
            accuracy=(tp + tn) / total if total else None,
            precision=tp / (tp + fp) if tp + fp else None,
            recall=tp / (tp + fn) if tp + fn else None,
        )

    def to_dict(self) -> dict:
        return {
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "tn": self.tn,
            "accuracy": self.accuracy,
            "precision": self.precision,
            "recall": self.recall,
        }


@dataclass(frozen=True)
class AggregateStats:
    """Corpus-wide accessibility tallies; percentages are None with no charts."""

    total_charts: int
    accessible_charts: int
    inaccessible_charts: int
    accessible_pct: Optional[float]
    inaccessible_pct: Optional[float]

    def to_dict(self) -> dict:
        return {
            "total_charts": self.total_charts,
            "accessible_charts": self.accessible_charts,
            "inaccessible_charts": self.inaccessible_charts,
            "accessible_pct": self.accessible_pct,
            "inaccessible_pct": self.inaccessible_pct,
        }


class PairingError(ValueError):
    """Audits and labels could not be matched one-to-one."""


class LabelsError(ValueError):
    """A labels CSV file does not follow the expected vocabulary."""


def is_chart_candidate(node: UiNode) -> bool:
    """True when the node's class is a custom-view host and its id mentions a chart."""
    final_segment = node.class_name.rsplit(".", 1)[-1]
    return final_segment in CHART_HOST_CLASSES and "chart" in node.resource_id.lower()


def _candidate_reason(node: UiNode) -> str:
    final_segment = node.class_name.rsplit(".", 1)[-1]
    note = "" if "chart" in node.resource_id else " (case-insensitive match)"
    return (
        f"class {final_segment} is a custom-view host and "
        f"resource-id {node.resource_id!r} contains 'chart'{note}"
    )


def is_node_accessible(node: UiNode) -> bool:
    """True when a screen-reader can land on the node by itself."""
    return node.focusable or bool(node.content_desc.strip())


def _near_chart(chart: Bounds, other: Bounds, proximity_px: int) -> bool:
    if chart.intersects(other):
        return True
    fully_below = (
        other.top >= chart.bottom and other.bottom <= chart.bottom + proximity_px
    )
    return fully_below and chart.horizontally_overlaps(other)


def nearby_text_description(
    chart: UiNode, root: UiNode, proximity_px: int = DEFAULT_PROXIMITY_PX
) -> Optional[UiNode]:
    """First document-order node whose text could stand in for the chart.

    Qualifying nodes carry non-empty text or content description and either
    overlap the chart's bounds (text within the chart) or sit fully inside
    the band ``proximity_px`` below its bottom edge with horizontal overlap.
    """
    for node in walk(root):
        if node is chart:
            continue
        if not (node.text.strip() or node.content_desc.strip()):
            continue
        if _near_chart(chart.bounds, node.bounds, proximity_px):
            return node
    return None


def audit_screen(
    root: UiNode, proximity_px: int = DEFAULT_PROXIMITY_PX, source_file: str = ""
) -> ScreenAudit:
    """Find every chart candidate in a tree and classify its accessibility."""
    findings = []
    for node in walk(root):
        if not is_chart_candidate(node):
            continue
        if is_node_accessible(node):
            status = AccessibilityStatus.FOCUSABLE_CHART
        elif nearby_text_description(node, root, proximity_px) is not None:
            status = AccessibilityStatus.NEARBY_TEXT_DESCRIPTION
        else:
            status = AccessibilityStatus.INACCESSIBLE
        findings.append((ChartCandidate(node, _candidate_reason(node)), status))
    return ScreenAudit(source_file=source_file, candidates=tuple(findings))


def evaluate_corpus(
    audits: Sequence[ScreenAudit], labels: Sequence[CorpusLabel]
) -> EvalMetrics:
    """Score chart-presence predictions against labeled truth.

    Every audit must pair with exactly one label by source_file; spare
    labels are tolerated so a corpus-wide label file can score a subset.
    """
    by_file: dict[str, CorpusLabel] = {}
    duplicates = []
    for label in labels:
        if label.source_file in by_file:
            duplicates.append(label.source_file)
        by_file[label.source_file] = label
    unlabeled = [a.source_file for a in audits if a.source_file not in by_file]
    if duplicates or unlabeled:
        problems = []
        if duplicates:
            problems.append(f"duplicate labels: {', '.join(sorted(set(duplicates)))}")
        if unlabeled:
            problems.append(f"audits without labels: {', '.join(sorted(unlabeled))}")
        raise PairingError("; ".join(problems))
    tp = fp = fn = tn = 0
    for audit in audits:
        truth = by_file[audit.source_file].has_chart
        predicted = audit.has_chart
        if predicted and truth:
            tp += 1
        elif predicted and not truth:
            fp += 1
        elif not predicted and truth:
            fn += 1
        else:
            tn += 1
    return EvalMetrics.from_counts(tp, fp, fn, tn)


def _percent(part: int, total: int) -> float:
    scaled = Decimal(part) * 100 / Decimal(total)
    return float(scaled.quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))


def aggregate_stats(audits: Iterable[ScreenAudit]) -> AggregateStats:
    """Tally accessible vs inaccessible charts across a corpus of audits."""
    statuses = [status for audit in audits for _, status in audit.candidates]
    total = len(statuses)
    inaccessible = sum(1 for s in statuses if s is AccessibilityStatus.INACCESSIBLE)
    accessible = total - inaccessible
    return AggregateStats(
        total_charts=total,
        accessible_charts=accessible,
        inaccessible_charts=inaccessible,
        accessible_pct=_percent(accessible, total) if total else None,
        inaccessible_pct=_percent(inaccessible, total) if total else None,
    )


def accessibility_agreement(
    audits: Sequence[ScreenAudit], labels: Sequence[CorpusLabel]
) -> dict:
    """Auxiliary rate: how often audit accessibility matches the label.

    Only screens where both sides found a chart and the label records an
    accessibility verdict are compared.
    """
    by_file = {label.source_file: label for label in labels}
    compared = agreed = 0
    for audit in audits:
        label = by_file.get(audit.source_file)
        if label is None or not label.has_chart or not audit.has_chart:
            continue
        if label.accessible is None:
            continue
        predicted_accessible = any(
            status is not AccessibilityStatus.INACCESSIBLE
            for _, status in audit.candidates
        )
        compared += 1
        agreed += predicted_accessible == label.accessible
    return {
        "screens_compared": compared,
        "agreement_rate": agreed / compared if compared else None,
    }


def load_labels_csv(path: str | Path) -> list[CorpusLabel]:
    """Load a labels CSV: header file,has_chart,chart_type,accessible.

    Vocabulary: has_chart y/n; chart_type l/b/p or empty; accessible y/n or
    empty. The latter two may only be filled in for chart screens.
    """
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames != LABELS_CSV_HEADER:
            raise LabelsError(
                f"{path}: expected header {','.join(LABELS_CSV_HEADER)}, "
                f"got {reader.fieldnames}"
            )
        labels = []
        for row_number, row in enumerate(reader, start=2):
            labels.append(_label_from_row(path, row_number, row))
    return labels


def _label_from_row(path: Path, row_number: int, row: dict) -> CorpusLabel:
    def fail(message: str) -> LabelsError:
        return LabelsError(f"{path}:{row_number}: {message}")

    source_file = (row.get("file") or "").strip()
    if not source_file:
        raise fail("missing file name")
    has_chart_code = (row.get("has_chart") or "").strip().lower()
    if has_chart_code not in ("y", "n"):
        raise fail(f"has_chart must be y or n, got {row.get('has_chart')!r}")
    type_code = (row.get("chart_type") or "").strip().lower()
    if type_code and type_code not in _CHART_TYPE_CODES:
        raise fail(f"chart_type must be l, b, p or empty, got {row.get('chart_type')!r}")
    accessible_code = (row.get("accessible") or "").strip().lower()
    if accessible_code and accessible_code not in ("y", "n"):
        raise fail(f"accessible must be y, n or empty, got {row.get('accessible')!r}")
    try:
        return CorpusLabel(
            source_file=source_file,
            has_chart=has_chart_code == "y",
            chart_type=_CHART_TYPE_CODES.get(type_code),
            accessible=accessible_code == "y" if accessible_code else None,
        )
    except ValueError as exc:
        raise fail(str(exc)) from exc


def screen_to_dict(audit: ScreenAudit) -> dict:
    """Per-screen report entry with a stable key order."""
    return {
        "file": audit.source_file,
        "has_chart": audit.has_chart,
        "candidates": [
            {
                "class_name": candidate.node.class_name,
                "resource_id": candidate.node.resource_id,
                "bounds": [
                    candidate.node.bounds.left,
                    candidate.node.bounds.top,
                    candidate.node.bounds.right,
                    candidate.node.bounds.bottom,
                ],
                "reason": candidate.reason,
                "status": status.value,
            }
            for candidate, status in audit.candidates
        ],
    }


def build_report(
    audits: Sequence[ScreenAudit], errors: Sequence[tuple[str, str]] = ()
) -> dict:
    """Assemble the audit report: per-screen findings plus the aggregate block."""
    screens: list[dict] = [screen_to_dict(audit) for audit in audits]
    screens.extend({"file": source_file, "error": message} for source_file, message in errors)
    screens.sort(key=lambda entry: entry["file"])
    return {"screens": screens, "aggregate": aggregate_stats(audits).to_dict()}
