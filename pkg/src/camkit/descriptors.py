"""Concrete chart descriptors: pie, categorical bar, rainfall column, stock line.

Each descriptor owns validated series data and renders a spoken-style
summary through ``describe()``; the module-level ``describe_*`` functions
are the functional face of the same templates. All timestamp rendering is
UTC so output never depends on the host timezone or locale.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Optional, Sequence

from .phrasing import (
    Descriptor,
    DescriptorConfig,
    Trend,
    detect_trend,
    format_value,
    join_list,
    phrase_proportion,
)

_DAY_ABBREV = ("Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun")
_MONTH_ABBREV = (
    "Jan", "Feb", "Mar", "Apr", "May", "Jun",
    "Jul", "Aug", "Sep", "Oct", "Nov", "Dec",
)


def _utc(epoch_ms: int) -> datetime:
    return datetime.fromtimestamp(epoch_ms // 1000, tz=timezone.utc)


def day_label(epoch_ms: int) -> str:
    """Render an epoch-millisecond timestamp as e.g. "Mon 12 Oct" (UTC)."""
    dt = _utc(epoch_ms)
    return f"{_DAY_ABBREV[dt.weekday()]} {dt.day:02d} {_MONTH_ABBREV[dt.month - 1]}"


def timestamp_label(epoch_ms: int) -> str:
    """Render an epoch-millisecond timestamp as e.g. "12 Oct 2020 11:41 17 seconds" (UTC)."""
    dt = _utc(epoch_ms)
    return (
        f"{dt.day:02d} {_MONTH_ABBREV[dt.month - 1]} {dt.year} "
        f"{dt.hour:02d}:{dt.minute:02d} {dt.second:02d} seconds"
    )


@dataclass(frozen=True)
class CategoricalSeries:
    """Labeled magnitudes with the titles needed to set chart context."""

    labels: tuple[str, ...]
    values: tuple[float, ...]
    category_title: str
    value_title: str
    chart_title: Optional[str] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(str(l) for l in self.labels))
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if not self.labels or len(self.labels) != len(self.values):
            raise ValueError("labels and values must be non-empty and equally long")
        if any(v < 0 for v in self.values):
            raise ValueError("categorical values cannot be negative")
        if not any(v > 0 for v in self.values):
            raise ValueError("at least one categorical value must be positive")


@dataclass(frozen=True)
class ProportionSeries:
    """Labeled slice proportions that must add up to (about) one."""

    labels: tuple[str, ...]
    proportions: tuple[float, ...]
    category_title: str
    chart_title: Optional[str] = None

    _SUM_TOLERANCE = 0.01

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(str(l) for l in self.labels))
        object.__setattr__(self, "proportions", tuple(float(p) for p in self.proportions))
        if not self.labels or len(self.labels) != len(self.proportions):
            raise ValueError("labels and proportions must be non-empty and equally long")
        if any(not 0.0 <= p <= 1.0 for p in self.proportions):
            raise ValueError("every proportion must lie in [0, 1]")
        total = sum(self.proportions)
        if abs(total - 1.0) > self._SUM_TOLERANCE:
            raise ValueError(f"proportions sum to {total}, expected 1 +/- {self._SUM_TOLERANCE}")

    @classmethod
    def from_values(
        cls,
        labels: Sequence[str],
        values: Sequence[float],
        category_title: str,
        chart_title: Optional[str] = None,
    ) -> "ProportionSeries":
        """Build a series from raw magnitudes, normalizing them to proportions."""
        values = [float(v) for v in values]
        if any(v < 0 for v in values):
            raise ValueError("raw slice values cannot be negative")
        total = sum(values)
        if total <= 0:
            raise ValueError("raw slice values must have a positive sum")
        return cls(tuple(labels), tuple(v / total for v in values), category_title, chart_title)


@dataclass(frozen=True)
class TimeSeries:
    """Strictly increasing epoch-millisecond timestamps with their values."""

    timestamps: tuple[int, ...]
    values: tuple[float, ...]
    subject: str
    unit_name: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "timestamps", tuple(int(t) for t in self.timestamps))
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if len(self.timestamps) != len(self.values):
            raise ValueError("timestamps and values must be equally long")
        if len(self.timestamps) < 2:
            raise ValueError("a time series needs at least two points")
        if any(b <= a for a, b in zip(self.timestamps, self.timestamps[1:])):
            raise ValueError("timestamps must be strictly increasing")


@dataclass(frozen=True)
class RainfallSeries:
    """Per-day rainfall in millimeters.

    Construction drops entries that cannot be spoken: unpaired tail entries
    when the two lists differ in length, and negative rainfall amounts.
    Both cases emit a warning rather than an error.
    """

    day_timestamps: tuple[int, ...]
    rainfall_mm: tuple[float, ...]
    location: Optional[str] = None

    def __post_init__(self) -> None:
        days = tuple(int(t) for t in self.day_timestamps)
        rain = tuple(float(m) for m in self.rainfall_mm)
        if len(days) != len(rain):
            warnings.warn(
                "day and rainfall lists differ in length; unpaired tail entries dropped",
                stacklevel=3,
            )
            n = min(len(days), len(rain))
            days, rain = days[:n], rain[:n]
        kept = [(t, m) for t, m in zip(days, rain) if m >= 0]
        if len(kept) != len(days):
            warnings.warn("negative rainfall entries dropped", stacklevel=3)
        object.__setattr__(self, "day_timestamps", tuple(t for t, _ in kept))
        object.__setattr__(self, "rainfall_mm", tuple(m for _, m in kept))


def order_and_group(
    series: ProportionSeries, config: DescriptorConfig = DescriptorConfig()
) -> tuple[list[tuple[str, float]], list[str]]:
    """Split a proportion series into entries read aloud and "others" labels.

    Entries are ranked by descending proportion (ties keep input order). At
    most ``config.max_read_entries`` are read individually; every remaining
    label lands in the others group, still in descending order.
    """
    ranked = sorted(
        zip(series.labels, series.proportions), key=lambda pair: -pair[1]
    )
    read_list = ranked[: config.max_read_entries]
    others = [label for label, _ in ranked[config.max_read_entries:]]
    return read_list, others


def describe_pie(series: ProportionSeries, config: DescriptorConfig = DescriptorConfig()) -> str:
    """Summarize a pie chart: context, point count, per-slice proportions, others."""
    read_list, others = order_and_group(series, config)
    title = series.chart_title if series.chart_title else series.category_title
    clauses = ", ".join(
        f"{label} fills up {phrase_proportion(p, config)} of {series.category_title}"
        for label, p in read_list
    )
    parts = [
        f"The pie chart describes {title}.",
        f"There are {len(series.labels)} data points.",
        clauses + ".",
    ]
    if others:
        parts.append(f"{join_list(others)} fill up the rest.")
    return " ".join(parts)


def describe_bar(series: CategoricalSeries, config: DescriptorConfig = DescriptorConfig()) -> str:
    """Summarize a categorical bar chart with raw counts instead of proportions."""
    ranked = sorted(zip(series.labels, series.values), key=lambda pair: -pair[1])
    read_list = ranked[: config.max_read_entries]
    others = [label for label, _ in ranked[config.max_read_entries:]]
    if series.chart_title:
        title = series.chart_title
    else:
        title = f"{series.category_title} by {series.value_title}"
    clauses = ", ".join(
        f"{label} has {format_value(v, config.decimal_places)} {series.value_title}"
        for label, v in read_list
    )
    parts = [
        f"The bar chart describes {title}.",
        f"There are {len(series.labels)} data points.",
        clauses + ".",
    ]
    if others:
        parts.append(f"{join_list(others)} make up the rest.")
    return " ".join(parts)


def rain_phrase(mm: float, repaired_bands: bool = False) -> str:
    """Phrase a rainfall amount with a weather word where a band matches.

    The default band table is checked first-match on inclusive bounds and
    has gaps (4-5, 6-8, 20-30 and above 700); amounts falling in a gap are
    spoken as the bare value. ``repaired_bands`` switches to a gap-free
    table instead.
    """
    if mm < 0:
        raise ValueError("rainfall cannot be negative")
    amount = f"{format_value(mm)} millimeters"
    if mm == 0:
        return "none"
    if repaired_bands:
        if mm <= 2:
            return f"drizzle of {amount}"
        if mm <= 4:
            return f"light rain of {amount}"
        if mm <= 6:
            return f"moderate rain of {amount}"
        if mm <= 15:
            return f"moderate strong rain of {amount}"
        if mm <= 20:
            return f"strong rain of {amount}"
        return f"heavy rainfall of {amount}"
    if 0 <= mm <= 2:
        return f"drizzle of {amount}"
    if 2 <= mm <= 4:
        return f"light rain of {amount}"
    if 5 <= mm <= 6:
        return f"moderate rain of {amount}"
    if 8 <= mm <= 15:
        return f"moderate strong rain of {amount}"
    if 15 <= mm <= 20:
        return f"strong rain of {amount}"
    if 30 <= mm <= 700:
        return f"heavy rainfall of {amount}"
    return amount


def describe_rainfall(series: RainfallSeries, repaired_bands: bool = False) -> str:
    """Summarize a weekly rainfall forecast, one clause per retained day."""
    if not series.day_timestamps:
        raise ValueError("rainfall series has no retained entries")
    place = f" for {series.location}" if series.location else ""
    context = (
        f"This column chart describes the forecasted rainfall{place} in the "
        f"upcoming week. It has {len(series.day_timestamps)} entries."
    )
    day_clauses = ",".join(
        f"On {day_label(t)}, {rain_phrase(mm, repaired_bands)} is forecasted"
        for t, mm in zip(series.day_timestamps, series.rainfall_mm)
    )
    return f"{context} {day_clauses}"


_TREND_WORDS = {
    Trend.UPWARD: "upwards",
    Trend.DOWNWARD: "downwards",
    Trend.FLAT: "sideways",
}


def describe_stock(series: TimeSeries, flat_epsilon: float = 0.0) -> str:
    """Summarize a stock-style line chart: trend, range, endpoints, extremes.

    Minimum and maximum ties resolve to the earliest timestamp.
    """
    trend = _TREND_WORDS[detect_trend(series.values, flat_epsilon)]
    # min()/max() return the first extreme, i.e. the earliest timestamp.
    low = min(range(len(series.values)), key=series.values.__getitem__)
    high = max(range(len(series.values)), key=series.values.__getitem__)
    unit = series.unit_name
    return " ".join(
        [
            f"The line chart shows information about {series.subject}, "
            f"which is trending {trend}.",
            f"The chart shows data from {timestamp_label(series.timestamps[0])} "
            f"to {timestamp_label(series.timestamps[-1])}.",
            f"The starting value is {format_value(series.values[0])} {unit} "
            f"and the closing value is {format_value(series.values[-1])} {unit}.",
            f"The minimum value is {format_value(series.values[low])} {unit} "
            f"on {timestamp_label(series.timestamps[low])}.",
            f"The maximum value is {format_value(series.values[high])} {unit} "
            f"on {timestamp_label(series.timestamps[high])}.",
        ]
    )


@dataclass(frozen=True)
class PieChartDescriptor(Descriptor):
    series: ProportionSeries
    config: DescriptorConfig = DescriptorConfig()

    def describe(self) -> str:
        return describe_pie(self.series, self.config)


@dataclass(frozen=True)
class BarChartDescriptor(Descriptor):
    series: CategoricalSeries
    config: DescriptorConfig = DescriptorConfig()

    def describe(self) -> str:
        return describe_bar(self.series, self.config)


@dataclass(frozen=True)
class RainfallColumnDescriptor(Descriptor):
    series: RainfallSeries
    repaired_bands: bool = False

    def describe(self) -> str:
        return describe_rainfall(self.series, self.repaired_bands)


@dataclass(frozen=True)
class StockLineDescriptor(Descriptor):
    series: TimeSeries
    flat_epsilon: float = 0.0

    def describe(self) -> str:
        return describe_stock(self.series, self.flat_epsilon)
