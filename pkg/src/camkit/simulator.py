"""Screen-reader traversal simulation.

Replays the focus pass a screen-reader makes over a parsed hierarchy and
records what would be spoken for each focused node, so descriptor
integration can be exercised end-to-end with no device attached.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .hierarchy import UiNode, walk
from .phrasing import Descriptor

UNLABELED_TEXT = "unlabeled element"


class UtteranceSource(Enum):
    DESCRIPTOR = "Descriptor"
    CONTENT_DESCRIPTION = "ContentDescription"
    NODE_TEXT = "NodeText"
    # Spoken for a focusable node with nothing to say, and flagged as such.
    PLACEHOLDER = "Placeholder"


@dataclass(frozen=True)
class Utterance:
    """One spoken line: which node, what text, and where the text came from."""

    node_ref: str
    spoken_text: str
    source: UtteranceSource


@dataclass
class DescriptorRegistry:
    """Descriptor bindings keyed by exact resource-id, at most one per id."""

    bindings: dict[str, Descriptor] = field(default_factory=dict)

    def bind(self, resource_id: str, descriptor: Descriptor) -> None:
        """Bind (or swap) the descriptor spoken for nodes with this resource-id."""
        if not resource_id:
            raise ValueError("cannot bind an empty resource-id")
        self.bindings[resource_id] = descriptor

    def get(self, resource_id: str) -> Optional[Descriptor]:
        return self.bindings.get(resource_id) if resource_id else None

    def resource_ids(self) -> set[str]:
        return set(self.bindings)


def _own_source(node: UiNode, registry: DescriptorRegistry) -> Optional[UtteranceSource]:
    if registry.get(node.resource_id) is not None:
        return UtteranceSource.DESCRIPTOR
    if node.content_desc.strip():
        return UtteranceSource.CONTENT_DESCRIPTION
    if node.text.strip():
        return UtteranceSource.NODE_TEXT
    return None


def _is_static_candidate(node: UiNode) -> bool:
    return node.focusable or bool(node.text.strip()) or bool(node.content_desc.strip())


def _candidates_below(root: UiNode) -> dict[int, bool]:
    """Map id(node) -> whether any strict descendant could take focus.

    Deliberately ignores registry bindings: suppression must not change when
    a descriptor is bound, or binding would reorder existing utterances.
    """
    below: dict[int, bool] = {}

    def visit(node: UiNode) -> bool:
        any_below = False
        for child in node.children:
            any_below = visit(child) or any_below
        below[id(node)] = any_below
        return any_below or _is_static_candidate(node)

    visit(root)
    return below


def traversal_order(
    root: UiNode, registry: Optional[DescriptorRegistry] = None
) -> list[UiNode]:
    """Nodes that would receive screen-reader focus, in reading (preorder) order.

    A node takes focus when it has something of its own to say (binding,
    content description or text) or is focusable with nothing speakable
    anywhere below it. Containers whose only content is focusable
    descendants are skipped so nothing is spoken twice.
    """
    registry = registry if registry is not None else DescriptorRegistry()
    below = _candidates_below(root)
    order = []
    for node in walk(root):
        if _own_source(node, registry) is not None:
            order.append(node)
        elif node.focusable and not below[id(node)]:
            order.append(node)
    return order


def utterance_for(
    node: UiNode, registry: Optional[DescriptorRegistry] = None, fallback_ref: str = ""
) -> Utterance:
    """What the screen-reader says for one focused node.

    Precedence: bound descriptor, then content description, then node text.
    A focusable node with none of these gets the flagged placeholder.
    """
    registry = registry if registry is not None else DescriptorRegistry()
    ref = node.resource_id or fallback_ref
    descriptor = registry.get(node.resource_id)
    if descriptor is not None:
        return Utterance(ref, descriptor.describe(), UtteranceSource.DESCRIPTOR)
    if node.content_desc.strip():
        return Utterance(ref, node.content_desc, UtteranceSource.CONTENT_DESCRIPTION)
    if node.text.strip():
        return Utterance(ref, node.text, UtteranceSource.NODE_TEXT)
    if node.focusable:
        return Utterance(ref, UNLABELED_TEXT, UtteranceSource.PLACEHOLDER)
    raise ValueError("node has no speakable source; not part of any traversal")


def _paths(root: UiNode) -> dict[int, str]:
    refs = {id(root): "/"}

    def visit(node: UiNode, prefix: str) -> None:
        for position, child in enumerate(node.children):
            path = f"{prefix}/{position}" if prefix != "/" else f"/{position}"
            refs[id(child)] = path
            visit(child, path)

    visit(root, "/")
    return refs


def simulate(
    root: UiNode, registry: Optional[DescriptorRegistry] = None
) -> list[Utterance]:
    """Full transcript for one screen: one utterance per focused node."""
    registry = registry if registry is not None else DescriptorRegistry()
    refs = _paths(root)
    return [
        utterance_for(node, registry, fallback_ref=refs[id(node)])
        for node in traversal_order(root, registry)
    ]
