"""Shared wording utilities that every chart descriptor builds on."""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_UP
from enum import Enum
from typing import Sequence


class Descriptor:
    """Contract for anything that can narrate itself.

    A descriptor holds whatever state it needs at construction time and
    exposes a single ``describe()`` returning one paragraph of text. Output
    must be deterministic for identical state.
    """

    def describe(self) -> str:
        raise NotImplementedError("descriptors must implement describe()")


PLACEHOLDER_TEXT = (
    "generate a text description, which will be passed to screen-reader based on state"
)


class PlaceholderDescriptor(Descriptor):
    """Default stand-in spoken before a real descriptor is wired up."""

    def describe(self) -> str:
        return PLACEHOLDER_TEXT


class Trend(Enum):
    UPWARD = "upward"
    DOWNWARD = "downward"
    FLAT = "flat"


@dataclass(frozen=True)
class DescriptorConfig:
    """Tuning knobs shared by the categorical descriptors.

    ``max_read_entries`` caps how many entries are read out individually
    before the remainder is folded into an "others" group. ``half_tolerance``
    is the width of the band around 0.5 inside which a proportion is spoken
    as "approximately half". ``decimal_places`` controls fixed-point value
    rendering.
    """

    max_read_entries: int = 7
    half_tolerance: float = 0.05
    decimal_places: int = 2

    def __post_init__(self) -> None:
        if self.max_read_entries < 1:
            raise ValueError("max_read_entries must be at least 1")
        if not 0.0 <= self.half_tolerance < 0.5:
            raise ValueError("half_tolerance must lie in [0, 0.5)")
        if self.decimal_places < 0:
            raise ValueError("decimal_places must be non-negative")


def format_value(value: float, places: int = 2) -> str:
    """Render a number with exactly ``places`` fractional digits.

    Ties round away from zero, so 0.125 becomes "0.13" at two places.
    """
    if not math.isfinite(value):
        raise ValueError(f"cannot format non-finite value {value!r}")
    if value == 0:
        value = 0.0  # never render "-0.00"
    quantum = Decimal(1).scaleb(-places)
    return str(Decimal(str(value)).quantize(quantum, rounding=ROUND_HALF_UP))


def phrase_proportion(p: float, config: DescriptorConfig = DescriptorConfig()) -> str:
    """Speak a proportion in [0, 1] as a percentage, or as "approximately half"."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"proportion {p!r} outside [0, 1]")
    # Decimal keeps the band boundary inclusive: 0.55 with tolerance 0.05
    # is still "approximately half" despite binary float error.
    as_decimal = Decimal(str(p))
    if abs(as_decimal - Decimal("0.5")) <= Decimal(str(config.half_tolerance)):
        return "approximately half"
    quantum = Decimal(1).scaleb(-config.decimal_places)
    percent = (as_decimal * 100).quantize(quantum, rounding=ROUND_HALF_UP)
    return f"{percent} percent"


def join_list(items: Sequence[str]) -> str:
    """Join items for reading aloud: "A", "A and B", "A, B and C"."""
    if not items:
        raise ValueError("cannot join an empty list")
    if len(items) == 1:
        return items[0]
    return ", ".join(items[:-1]) + " and " + items[-1]


def detect_trend(values: Sequence[float], flat_epsilon: float = 0.0) -> Trend:
    """Classify a series by its endpoints; interior points do not matter.

    A move of more than ``flat_epsilon`` in either direction counts as a
    trend; anything inside the dead-band is flat.
    """
    if len(values) < 2:
        raise ValueError("trend detection needs at least two values")
    if flat_epsilon < 0:
        raise ValueError("flat_epsilon cannot be negative")
    delta = values[-1] - values[0]
    if delta < -flat_epsilon:
        return Trend.DOWNWARD
    if delta > flat_epsilon:
        return Trend.UPWARD
    return Trend.FLAT


# Upper bounds (exclusive, m/s) for bands 0..11; anything above the last
# bound is band 12.
_BEAUFORT_BANDS: tuple[tuple[float, str], ...] = (
    (0.5, "calm"),
    (1.6, "light air"),
    (3.4, "light breeze"),
    (5.5, "gentle breeze"),
    (8.0, "moderate breeze"),
    (10.8, "fresh breeze"),
    (13.9, "strong breeze"),
    (17.2, "near gale"),
    (20.8, "gale"),
    (24.5, "strong gale"),
    (28.5, "storm"),
    (32.7, "violent storm"),
)


def beaufort_phrase(speed: float) -> str:
    """Map a wind speed in meters/second onto the 13-band Beaufort wording."""
    if not math.isfinite(speed) or speed < 0:
        raise ValueError(f"wind speed must be finite and non-negative, got {speed!r}")
    for upper_bound, phrase in _BEAUFORT_BANDS:
        if speed < upper_bound:
            return phrase
    return "hurricane force"
