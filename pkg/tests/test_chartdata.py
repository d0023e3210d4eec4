import json

import pytest

from conftest import FIXTURES

from camkit.chartdata import (
    ChartDataError,
    descriptor_from_obj,
    load_chart_file,
    load_registry_file,
)
from camkit.descriptors import (
    BarChartDescriptor,
    PieChartDescriptor,
    RainfallColumnDescriptor,
    StockLineDescriptor,
)
from camkit.phrasing import DescriptorConfig


def load_fixture(name):
    return json.loads((FIXTURES / "charts" / name).read_text())


class TestDescriptorFromObj:
    def test_pie_with_proportions(self):
        descriptor = descriptor_from_obj(load_fixture("pie_market_share.json"))
        assert isinstance(descriptor, PieChartDescriptor)
        assert descriptor.series.chart_title == "Market share of automobile companies"

    def test_pie_with_raw_values_normalizes(self):
        obj = {
            "type": "pie",
            "data": {"labels": ["a", "b"], "values": [30, 10], "categoryTitle": "T"},
        }
        descriptor = descriptor_from_obj(obj)
        assert descriptor.series.proportions == (0.75, 0.25)

    def test_pie_rejects_both_proportions_and_values(self):
        obj = {
            "type": "pie",
            "data": {
                "labels": ["a"], "values": [1], "proportions": [1.0],
                "categoryTitle": "T",
            },
        }
        with pytest.raises(ChartDataError, match="exactly one"):
            descriptor_from_obj(obj)

    def test_bar(self):
        descriptor = descriptor_from_obj(load_fixture("bar_car_sales.json"))
        assert isinstance(descriptor, BarChartDescriptor)
        assert descriptor.series.value_title == "sale count"

    def test_rainfall(self):
        descriptor = descriptor_from_obj(load_fixture("rainfall_week.json"))
        assert isinstance(descriptor, RainfallColumnDescriptor)
        assert descriptor.series.location == "Melbourne"

    def test_stock(self):
        descriptor = descriptor_from_obj(load_fixture("stock_amazon.json"))
        assert isinstance(descriptor, StockLineDescriptor)
        assert descriptor.series.subject == "Amazon"

    def test_unknown_type(self):
        with pytest.raises(ChartDataError, match="unknown chart type"):
            descriptor_from_obj({"type": "spider", "data": {}})

    def test_missing_field_is_named(self):
        obj = {"type": "bar", "data": {"labels": ["a"], "values": [1]}}
        with pytest.raises(ChartDataError, match="data.categoryTitle"):
            descriptor_from_obj(obj)

    def test_wrong_field_type_is_named(self):
        obj = {
            "type": "bar",
            "data": {
                "labels": ["a"], "values": ["many"],
                "categoryTitle": "T", "valueTitle": "V",
            },
        }
        with pytest.raises(ChartDataError, match="data.values"):
            descriptor_from_obj(obj)

    def test_booleans_are_not_numbers(self):
        obj = {
            "type": "stock",
            "data": {
                "epochMillis": [1000, 2000], "values": [True, False],
                "subject": "S", "unitName": "U",
            },
        }
        with pytest.raises(ChartDataError, match="data.values"):
            descriptor_from_obj(obj)

    def test_series_invariant_violations_become_chart_data_errors(self):
        obj = {
            "type": "pie",
            "data": {"labels": ["a", "b"], "proportions": [0.9, 0.9], "categoryTitle": "T"},
        }
        with pytest.raises(ChartDataError, match="sum"):
            descriptor_from_obj(obj)

    def test_config_reaches_the_descriptor(self):
        cfg = DescriptorConfig(max_read_entries=3)
        descriptor = descriptor_from_obj(load_fixture("pie_market_share.json"), cfg)
        assert descriptor.config.max_read_entries == 3

    def test_non_object_document(self):
        with pytest.raises(ChartDataError, match="document"):
            descriptor_from_obj(["not", "a", "chart"])


class TestLoadChartFile:
    def test_loads_fixture(self):
        descriptor = load_chart_file(FIXTURES / "charts" / "stock_amazon.json")
        assert "Amazon" in descriptor.describe()

    def test_malformed_json(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        with pytest.raises(ChartDataError, match="malformed JSON"):
            load_chart_file(bad)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ChartDataError):
            load_chart_file(tmp_path / "absent.json")


class TestLoadRegistryFile:
    def test_loads_demo_registry(self):
        registry = load_registry_file(FIXTURES / "demo" / "registry.json")
        assert registry.resource_ids() == {"com.example.market:id/share_piechart"}
        descriptor = registry.get("com.example.market:id/share_piechart")
        assert "pie chart" in descriptor.describe()

    def test_binding_errors_name_the_resource_id(self, tmp_path):
        path = tmp_path / "registry.json"
        path.write_text(json.dumps({"x:id/chart": {"type": "nope", "data": {}}}))
        with pytest.raises(ChartDataError, match="x:id/chart"):
            load_registry_file(path)

    def test_registry_must_be_an_object(self, tmp_path):
        path = tmp_path / "registry.json"
        path.write_text("[1, 2]")
        with pytest.raises(ChartDataError, match="object"):
            load_registry_file(path)
