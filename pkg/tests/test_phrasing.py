import random

import pytest

from camkit.phrasing import (
    Descriptor,
    DescriptorConfig,
    PLACEHOLDER_TEXT,
    PlaceholderDescriptor,
    Trend,
    beaufort_phrase,
    detect_trend,
    format_value,
    join_list,
    phrase_proportion,
)


class TestDescriptorConfig:
    def test_defaults(self):
        cfg = DescriptorConfig()
        assert (cfg.max_read_entries, cfg.half_tolerance, cfg.decimal_places) == (7, 0.05, 2)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"max_read_entries": 0},
            {"max_read_entries": -1},
            {"half_tolerance": -0.01},
            {"half_tolerance": 0.5},
            {"decimal_places": -1},
        ],
    )
    def test_rejects_bad_values(self, kwargs):
        with pytest.raises(ValueError):
            DescriptorConfig(**kwargs)


class TestDescribeContract:
    def test_base_class_is_abstract(self):
        with pytest.raises(NotImplementedError):
            Descriptor().describe()

    def test_placeholder_is_fixed_and_deterministic(self):
        placeholder = PlaceholderDescriptor()
        assert placeholder.describe() == PLACEHOLDER_TEXT
        assert placeholder.describe() == placeholder.describe()


class TestFormatValue:
    @pytest.mark.parametrize(
        "value,places,expected",
        [
            (3.5, 2, "3.50"),
            (0.0, 2, "0.00"),
            (3195.69, 2, "3195.69"),
            (3223, 2, "3223.00"),
            (0.125, 2, "0.13"),   # tie rounds away from zero
            (-0.125, 2, "-0.13"),
            (2.5, 0, "3"),
            (-2.5, 0, "-3"),
            (-0.0, 2, "0.00"),
        ],
    )
    def test_fixed_point(self, value, places, expected):
        assert format_value(value, places) == expected

    @pytest.mark.parametrize("bad", [float("nan"), float("inf"), float("-inf")])
    def test_rejects_non_finite(self, bad):
        with pytest.raises(ValueError):
            format_value(bad, 2)

    def test_parse_back_stays_within_half_ulp(self):
        rng = random.Random(1201)
        for _ in range(500):
            places = rng.randrange(0, 5)
            value = rng.uniform(-1e4, 1e4)
            rendered = format_value(value, places)
            assert abs(float(rendered) - value) <= 0.5 * 10 ** -places + 1e-12


class TestPhraseProportion:
    @pytest.mark.parametrize(
        "p,expected",
        [
            (0.17, "17.00 percent"),
            (0.50, "approximately half"),
            (0.08, "8.00 percent"),
            (1.0, "100.00 percent"),
            (0.0, "0.00 percent"),
            (0.55, "approximately half"),    # boundary of the default band
            (0.45, "approximately half"),
            (0.5551, "55.51 percent"),
        ],
    )
    def test_wording(self, p, expected):
        assert phrase_proportion(p) == expected

    def test_band_width_is_configurable(self):
        tight = DescriptorConfig(half_tolerance=0.0)
        assert phrase_proportion(0.51, tight) == "51.00 percent"
        assert phrase_proportion(0.5, tight) == "approximately half"

    @pytest.mark.parametrize("bad", [-0.01, 1.01, 2.0])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(ValueError):
            phrase_proportion(bad)

    def test_monotone_outside_half_band(self):
        cfg = DescriptorConfig()
        rng = random.Random(77)
        for _ in range(500):
            a, b = sorted((rng.random(), rng.random()))
            if abs(a - 0.5) <= cfg.half_tolerance or abs(b - 0.5) <= cfg.half_tolerance:
                continue
            pa = float(phrase_proportion(a, cfg).split()[0])
            pb = float(phrase_proportion(b, cfg).split()[0])
            assert pa <= pb


class TestJoinList:
    def test_five_names(self):
        names = ["Tata", "Honda", "Toyota", "Renault", "Ford"]
        assert join_list(names) == "Tata, Honda, Toyota, Renault and Ford"

    def test_singleton(self):
        assert join_list(["Saturday"]) == "Saturday"

    def test_pair(self):
        assert join_list(["A", "B"]) == "A and B"

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            join_list([])

    def test_every_item_appears_exactly_once_in_order(self):
        rng = random.Random(404)
        for _ in range(500):
            items = [f"item{i:02d}" for i in range(rng.randrange(1, 12))]
            joined = join_list(items)
            positions = [joined.index(item) for item in items]
            assert positions == sorted(positions)
            for item in items:
                assert joined.count(item) == 1


class TestDetectTrend:
    def test_downward_by_endpoints(self):
        values = [3195.69, 3210.68, 3200.0, 3184.07, 3190.55]
        assert detect_trend(values, 0.0) is Trend.DOWNWARD

    def test_flat_when_endpoints_equal(self):
        assert detect_trend([5, 5], 0.0) is Trend.FLAT

    def test_interior_points_ignored(self):
        assert detect_trend([1, 2, 0, 3], 0.0) is Trend.UPWARD

    def test_dead_band_is_inclusive(self):
        assert detect_trend([10.0, 10.5], 0.5) is Trend.FLAT
        assert detect_trend([10.0, 10.51], 0.5) is Trend.UPWARD

    def test_too_short_rejected(self):
        with pytest.raises(ValueError):
            detect_trend([1.0], 0.0)

    def test_negative_epsilon_rejected(self):
        with pytest.raises(ValueError):
            detect_trend([1.0, 2.0], -0.1)


class TestBeaufortPhrase:
    @pytest.mark.parametrize(
        "speed,expected",
        [
            (0.0, "calm"),
            (0.49, "calm"),
            (0.5, "light air"),
            (2.0, "light breeze"),
            (5.4, "gentle breeze"),
            (10.0, "fresh breeze"),
            (17.0, "near gale"),
            (24.4, "strong gale"),
            (32.69, "violent storm"),
            (32.7, "hurricane force"),
            (33.0, "hurricane force"),
            (120.0, "hurricane force"),
        ],
    )
    def test_band_lookup(self, speed, expected):
        assert beaufort_phrase(speed) == expected

    def test_rejects_negative_and_non_finite(self):
        for bad in (-0.1, float("nan"), float("inf")):
            with pytest.raises(ValueError):
                beaufort_phrase(bad)

    def test_total_step_function(self):
        # Fine scan across every threshold: exactly one band per speed and
        # band index never decreases as speed grows.
        order = [
            "calm", "light air", "light breeze", "gentle breeze",
            "moderate breeze", "fresh breeze", "strong breeze", "near gale",
            "gale", "strong gale", "storm", "violent storm", "hurricane force",
        ]
        last = 0
        for step in range(0, 35001):
            band = order.index(beaufort_phrase(step / 1000.0))
            assert band >= last
            last = band
        assert last == len(order) - 1
