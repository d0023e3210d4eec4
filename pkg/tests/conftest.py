"""Shared fixture paths and random-tree builders for the test suite."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from camkit.hierarchy import Bounds, UiNode

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


_CLASS_POOL = (
    "android.widget.TextView",
    "android.widget.Button",
    "android.widget.LinearLayout",
    "android.widget.FrameLayout",
    "android.view.View",
    "android.view.ViewGroup",
    "android.widget.ImageView",
)

# Attribute text exercising XML escaping in round-trip tests.
_TEXT_POOL = (
    "", "", "OK", "Sign in", "a < b & c > d", 'quote "x" and \'y\'',
    "Updated daily", "3.5mm Saturday", "Totals & subtotals",
)


def random_bounds(rng: random.Random) -> Bounds:
    left = rng.randrange(0, 900)
    top = rng.randrange(0, 1700)
    return Bounds(left, top, left + rng.randrange(1, 180), top + rng.randrange(1, 180))


def random_dump_tree(rng: random.Random, max_children: int = 3, depth: int = 3) -> UiNode:
    """A random parsed-dump-shaped tree rooted at a hierarchy wrapper."""
    counter = [0]

    def build(level: int) -> UiNode:
        counter[0] += 1
        n_children = rng.randrange(0, max_children + 1) if level < depth else 0
        extras = {}
        if rng.random() < 0.5:
            extras["package"] = "com.gen.app"
        if rng.random() < 0.3:
            extras["clickable"] = rng.choice(("true", "false"))
        return UiNode(
            class_name=rng.choice(_CLASS_POOL),
            resource_id=f"com.gen.app:id/node{counter[0]}" if rng.random() < 0.6 else "",
            content_desc=rng.choice(_TEXT_POOL) if rng.random() < 0.25 else "",
            focusable=rng.random() < 0.2,
            text=rng.choice(_TEXT_POOL) if rng.random() < 0.4 else "",
            bounds=random_bounds(rng),
            index=rng.randrange(0, 8),
            children=tuple(build(level + 1) for _ in range(n_children)),
        )

    top_level = tuple(build(1) for _ in range(rng.randrange(0, max_children + 1)))
    return UiNode(class_name="hierarchy", children=top_level, extras={"rotation": "0"})


def random_screen(rng: random.Random) -> tuple[UiNode, str]:
    """A random screen containing exactly one silent, unbound chart node.

    Returns the hierarchy root and the chart node's resource-id. The chart
    node is not focusable and carries no text, so it is absent from any
    transcript until a descriptor is bound to it.
    """
    counter = [0]

    def build(level: int) -> UiNode:
        counter[0] += 1
        n_children = rng.randrange(0, 4) if level < 3 else 0
        return UiNode(
            class_name=rng.choice(_CLASS_POOL),
            resource_id=f"com.gen.app:id/node{counter[0]}" if rng.random() < 0.4 else "",
            content_desc="Search" if rng.random() < 0.15 else "",
            focusable=rng.random() < 0.2,
            text=rng.choice(("Title", "Open", "Updated")) if rng.random() < 0.3 else "",
            bounds=random_bounds(rng),
            index=0,
            children=tuple(build(level + 1) for _ in range(n_children)),
        )

    chart_id = "com.gen.app:id/silent_piechart"
    chart = UiNode(
        class_name="android.view.ViewGroup",
        resource_id=chart_id,
        bounds=Bounds(40, 200, 1040, 1200),
    )
    siblings = [build(1) for _ in range(rng.randrange(1, 4))]
    siblings.insert(rng.randrange(0, len(siblings) + 1), chart)
    root = UiNode(class_name="hierarchy", children=(
        UiNode(
            class_name="android.widget.FrameLayout",
            bounds=Bounds(0, 0, 1080, 1920),
            children=tuple(siblings),
        ),
    ))
    return root, chart_id
