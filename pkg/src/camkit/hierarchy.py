"""Typed model and parser for ``uiautomator dump`` view-hierarchy XML files.

A dump is a single ``<hierarchy>`` element containing nested ``<node>``
elements. Seven attributes are modeled directly; everything else survives
in ``UiNode.extras`` so later heuristics can use attributes this module
does not yet care about.
"""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional


class DumpError(ValueError):
    """Base class for anything wrong with a view-hierarchy dump."""


class DumpParseError(DumpError):
    """The dump text could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class DumpStructureError(DumpError):
    """The XML parsed but is not shaped like a view-hierarchy dump."""


@dataclass(frozen=True)
class Bounds:
    """Pixel rectangle as captured in a dump's ``bounds`` attribute."""

    left: int
    top: int
    right: int
    bottom: int

    def __post_init__(self) -> None:
        if self.left > self.right or self.top > self.bottom:
            raise ValueError(
                f"inverted bounds [{self.left},{self.top}][{self.right},{self.bottom}]"
            )

    def intersects(self, other: "Bounds") -> bool:
        """True when the two rectangles share any area."""
        return (
            self.left < other.right
            and other.left < self.right
            and self.top < other.bottom
            and other.top < self.bottom
        )

    def horizontally_overlaps(self, other: "Bounds") -> bool:
        return self.left < other.right and other.left < self.right


@dataclass(frozen=True)
class UiNode:
    """One node of a parsed view hierarchy. Treat as immutable."""

    class_name: str = ""
    resource_id: str = ""
    content_desc: str = ""
    focusable: bool = False
    text: str = ""
    bounds: Bounds = Bounds(0, 0, 0, 0)
    index: int = 0
    children: tuple["UiNode", ...] = ()
    extras: dict[str, str] = field(default_factory=dict)


_BOUNDS_RE = re.compile(r"\[(-?\d+),(-?\d+)\]\[(-?\d+),(-?\d+)\]")
_ENCODING_RE = re.compile(r"^\s*<\?xml[^>]*?encoding=[\"']([^\"']+)[\"']")


def parse_bounds(attr_text: str) -> Bounds:
    """Parse a ``[x1,y1][x2,y2]`` bounds attribute into a rectangle."""
    match = _BOUNDS_RE.fullmatch(attr_text.strip())
    if match is None:
        raise DumpParseError(
            f'attribute bounds="{attr_text}" does not match "[x1,y1][x2,y2]"'
        )
    try:
        return Bounds(*(int(g) for g in match.groups()))
    except ValueError as exc:
        raise DumpParseError(f'attribute bounds="{attr_text}" rejected: {exc}') from exc


def _node_from_element(element: ET.Element) -> UiNode:
    attrs = dict(element.attrib)
    bounds_attr = attrs.pop("bounds", None)
    index_attr = attrs.pop("index", "0")
    try:
        index = int(index_attr) if index_attr else 0
    except ValueError as exc:
        raise DumpParseError(f'attribute index="{index_attr}" is not an integer') from exc
    return UiNode(
        class_name=attrs.pop("class", ""),
        resource_id=attrs.pop("resource-id", ""),
        content_desc=attrs.pop("content-desc", ""),
        focusable=attrs.pop("focusable", "") == "true",
        text=attrs.pop("text", ""),
        bounds=parse_bounds(bounds_attr) if bounds_attr is not None else Bounds(0, 0, 0, 0),
        index=index,
        children=tuple(_node_from_element(child) for child in element),
        extras=attrs,
    )


def parse_dump(xml_text: str) -> UiNode:
    """Parse dump XML into a tree rooted at the ``<hierarchy>`` element.

    The returned root is the hierarchy wrapper itself; the screen's top
    views are its children, so an empty dump parses to a root with zero
    children. Missing attributes default to empty text and focusable=false.
    """
    encoding_match = _ENCODING_RE.match(xml_text)
    if encoding_match and encoding_match.group(1).lower() not in ("utf-8", "utf8"):
        raise DumpParseError(
            f"dump declares encoding {encoding_match.group(1)!r}; only UTF-8 is supported"
        )
    try:
        root_element = ET.fromstring(xml_text)
    except ET.ParseError as exc:
        line, column = exc.position if exc.position else (None, None)
        raise DumpParseError(f"malformed dump XML: {exc.msg}", line, column) from exc
    if root_element.tag != "hierarchy":
        raise DumpStructureError(
            f"expected a <hierarchy> root element, found <{root_element.tag}>"
        )
    for element in root_element.iter():
        if element is not root_element and element.tag != "node":
            raise DumpStructureError(f"unexpected <{element.tag}> element inside hierarchy")
    return UiNode(
        class_name="hierarchy",
        children=tuple(_node_from_element(child) for child in root_element),
        extras=dict(root_element.attrib),
    )


def parse_dump_file(path: str | Path) -> UiNode:
    """Read and parse one dump file; the dump must decode as UTF-8."""
    raw = Path(path).read_bytes()
    try:
        # utf-8-sig tolerates the BOM some capture tools prepend.
        text = raw.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise DumpParseError(f"{path}: dump is not valid UTF-8 ({exc})") from exc
    return parse_dump(text)


def walk(root: UiNode) -> Iterator[UiNode]:
    """Yield nodes depth-first in preorder, children in document order."""
    yield root
    for child in root.children:
        yield from walk(child)


def _element_for(node: UiNode, tag: str) -> ET.Element:
    element = ET.Element(tag)
    if tag == "node":
        element.set("index", str(node.index))
        element.set("class", node.class_name)
        element.set("resource-id", node.resource_id)
        element.set("text", node.text)
        element.set("content-desc", node.content_desc)
        element.set("focusable", "true" if node.focusable else "false")
        b = node.bounds
        element.set("bounds", f"[{b.left},{b.top}][{b.right},{b.bottom}]")
    for key in sorted(node.extras):
        element.set(key, node.extras[key])
    for child in node.children:
        element.append(_element_for(child, "node"))
    return element


def to_canonical_xml(root: UiNode) -> str:
    """Serialize a tree in canonical form: fixed attribute order, 2-space indent.

    Round-trips: parsing the result yields a tree equal to ``root`` when
    ``root`` came from ``parse_dump``.
    """
    element = _element_for(root, "hierarchy")
    ET.indent(element, space="  ")
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(element, encoding="unicode")
