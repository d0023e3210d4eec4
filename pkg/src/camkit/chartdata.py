"""Loader for the chart-data JSON contract.

A chart document is ``{"type": ..., "data": {...}}`` where type is one of
pie, bar, rainfall or stock. A registry document maps resource-ids to chart
documents. Validation errors name the offending field.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional

from .descriptors import (
    BarChartDescriptor,
    CategoricalSeries,
    PieChartDescriptor,
    ProportionSeries,
    RainfallColumnDescriptor,
    RainfallSeries,
    StockLineDescriptor,
    TimeSeries,
)
from .phrasing import Descriptor, DescriptorConfig
from .simulator import DescriptorRegistry

CHART_TYPES = ("pie", "bar", "rainfall", "stock")


class ChartDataError(ValueError):
    """A chart-data document does not match the contract."""


def _require(data: dict, name: str, where: str = "data") -> Any:
    if name not in data:
        raise ChartDataError(f"{where}.{name}: required field is missing")
    return data[name]


def _string(data: dict, name: str, where: str = "data") -> str:
    value = _require(data, name, where)
    if not isinstance(value, str) or not value.strip():
        raise ChartDataError(f"{where}.{name}: expected a non-empty string")
    return value


def _optional_string(data: dict, name: str, where: str = "data") -> Optional[str]:
    value = data.get(name)
    if value is None:
        return None
    if not isinstance(value, str) or not value.strip():
        raise ChartDataError(f"{where}.{name}: expected a non-empty string")
    return value


def _string_list(data: dict, name: str, where: str = "data") -> list[str]:
    value = _require(data, name, where)
    if not isinstance(value, list) or not all(isinstance(item, str) for item in value):
        raise ChartDataError(f"{where}.{name}: expected a list of strings")
    return value


def _number_list(data: dict, name: str, where: str = "data") -> list[float]:
    value = _require(data, name, where)
    ok = isinstance(value, list) and all(
        isinstance(item, (int, float)) and not isinstance(item, bool) for item in value
    )
    if not ok:
        raise ChartDataError(f"{where}.{name}: expected a list of numbers")
    return [float(item) for item in value]


def descriptor_from_obj(
    obj: Any,
    config: DescriptorConfig = DescriptorConfig(),
    flat_epsilon: float = 0.0,
    repaired_rain_bands: bool = False,
) -> Descriptor:
    """Validate one chart document and build the matching descriptor."""
    if not isinstance(obj, dict):
        raise ChartDataError("document: expected a JSON object")
    chart_type = _require(obj, "type", "document")
    if chart_type not in CHART_TYPES:
        raise ChartDataError(
            f"document.type: unknown chart type {chart_type!r}; "
            f"expected one of {', '.join(CHART_TYPES)}"
        )
    data = _require(obj, "data", "document")
    if not isinstance(data, dict):
        raise ChartDataError("document.data: expected a JSON object")
    try:
        if chart_type == "pie":
            return PieChartDescriptor(_pie_series(data), config)
        if chart_type == "bar":
            return BarChartDescriptor(_bar_series(data), config)
        if chart_type == "rainfall":
            return RainfallColumnDescriptor(_rainfall_series(data), repaired_rain_bands)
        return StockLineDescriptor(_stock_series(data), flat_epsilon)
    except ChartDataError:
        raise
    except ValueError as exc:
        raise ChartDataError(f"data: {exc}") from exc


def _pie_series(data: dict) -> ProportionSeries:
    labels = _string_list(data, "labels")
    category_title = _string(data, "categoryTitle")
    chart_title = _optional_string(data, "chartTitle")
    has_proportions = "proportions" in data
    has_values = "values" in data
    if has_proportions == has_values:
        raise ChartDataError(
            "data: provide exactly one of 'proportions' or 'values' for a pie chart"
        )
    if has_proportions:
        return ProportionSeries(
            labels, _number_list(data, "proportions"), category_title, chart_title
        )
    return ProportionSeries.from_values(
        labels, _number_list(data, "values"), category_title, chart_title
    )


def _bar_series(data: dict) -> CategoricalSeries:
    return CategoricalSeries(
        labels=tuple(_string_list(data, "labels")),
        values=tuple(_number_list(data, "values")),
        category_title=_string(data, "categoryTitle"),
        value_title=_string(data, "valueTitle"),
        chart_title=_optional_string(data, "chartTitle"),
    )


def _rainfall_series(data: dict) -> RainfallSeries:
    return RainfallSeries(
        day_timestamps=tuple(int(t) for t in _number_list(data, "epochMillis")),
        rainfall_mm=tuple(_number_list(data, "rainfallMm")),
        location=_optional_string(data, "location"),
    )


def _stock_series(data: dict) -> TimeSeries:
    return TimeSeries(
        timestamps=tuple(int(t) for t in _number_list(data, "epochMillis")),
        values=tuple(_number_list(data, "values")),
        subject=_string(data, "subject"),
        unit_name=_string(data, "unitName"),
    )


def load_chart_file(
    path: str | Path,
    config: DescriptorConfig = DescriptorConfig(),
    flat_epsilon: float = 0.0,
    repaired_rain_bands: bool = False,
) -> Descriptor:
    """Read one chart-data JSON file and build its descriptor."""
    path = Path(path)
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError) as exc:
        raise ChartDataError(f"{path}: cannot read chart data ({exc})") from exc
    except json.JSONDecodeError as exc:
        raise ChartDataError(f"{path}: malformed JSON ({exc})") from exc
    return descriptor_from_obj(obj, config, flat_epsilon, repaired_rain_bands)


def load_registry_file(
    path: str | Path,
    config: DescriptorConfig = DescriptorConfig(),
    flat_epsilon: float = 0.0,
    repaired_rain_bands: bool = False,
) -> DescriptorRegistry:
    """Read a registry JSON file mapping resource-ids to chart documents."""
    path = Path(path)
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError) as exc:
        raise ChartDataError(f"{path}: cannot read registry ({exc})") from exc
    except json.JSONDecodeError as exc:
        raise ChartDataError(f"{path}: malformed JSON ({exc})") from exc
    if not isinstance(obj, dict):
        raise ChartDataError(f"{path}: registry must be an object of resource-id keys")
    registry = DescriptorRegistry()
    for resource_id, chart_obj in obj.items():
        if not resource_id:
            raise ChartDataError(f"{path}: registry keys must be non-empty resource-ids")
        try:
            descriptor = descriptor_from_obj(
                chart_obj, config, flat_epsilon, repaired_rain_bands
            )
        except ChartDataError as exc:
            raise ChartDataError(f"{path}: binding {resource_id!r}: {exc}") from exc
        registry.bind(resource_id, descriptor)
    return registry
