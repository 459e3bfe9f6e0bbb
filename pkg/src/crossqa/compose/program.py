"""Program trees recording how composed questions were built.

A program is an operation tree over atomic questions: Atomic leaves, Compose
(bridge an entity mention through a sub-question), Intersect (conjunction of
two entity lists), and Compare (pick one of two table-linked entities by a
date/numeric column). Serialized programs embed the full leaf payloads so a
dataset line is self-contained.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..atomic.model import AtomicQuestion

MODALITY_LABELS = {
    "table": "TableQ",
    "text": "TextQ",
    "image": "ImageQ",
    "image_list": "ImageListQ",
}
LABEL_MODALITIES = {v: k for k, v in MODALITY_LABELS.items()}


@dataclass(frozen=True)
class AtomicNode:
    question: AtomicQuestion


@dataclass(frozen=True)
class ComposeNode:
    outer: "ProgramNode"
    inner: "ProgramNode"


@dataclass(frozen=True)
class IntersectNode:
    left: "ProgramNode"
    right: "ProgramNode"


@dataclass(frozen=True)
class CompareNode:
    left: "ProgramNode"
    right: "ProgramNode"
    column: int
    column_header: str
    op: str  # min | max


ProgramNode = Union[AtomicNode, ComposeNode, IntersectNode, CompareNode]


@dataclass(frozen=True)
class Program:
    node: ProgramNode
    question_type: str

    @property
    def is_atomic(self) -> bool:
        return isinstance(self.node, AtomicNode)

    def leaves(self) -> list[AtomicQuestion]:
        return node_leaves(self.node)

    def modalities_used(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for leaf in self.leaves():
            seen.setdefault(leaf.modality, None)
        return tuple(seen)

    def depth(self) -> int:
        return node_depth(self.node)

    def to_dict(self) -> dict:
        return {"question_type": self.question_type, "node": node_to_dict(self.node)}

    @classmethod
    def from_dict(cls, d: dict) -> "Program":
        return cls(node=node_from_dict(d["node"]), question_type=d["question_type"])


def node_leaves(node: ProgramNode) -> list[AtomicQuestion]:
    if isinstance(node, AtomicNode):
        return [node.question]
    if isinstance(node, ComposeNode):
        return node_leaves(node.outer) + node_leaves(node.inner)
    if isinstance(node, (IntersectNode, CompareNode)):
        return node_leaves(node.left) + node_leaves(node.right)
    raise TypeError(f"unknown node {node!r}")


def node_depth(node: ProgramNode) -> int:
    """Number of operations on the deepest path (atomic leaves count 0)."""
    if isinstance(node, AtomicNode):
        return 0
    if isinstance(node, ComposeNode):
        return 1 + max(node_depth(node.outer), node_depth(node.inner))
    if isinstance(node, (IntersectNode, CompareNode)):
        return 1 + max(node_depth(node.left), node_depth(node.right))
    raise TypeError(f"unknown node {node!r}")


def node_to_dict(node: ProgramNode) -> dict:
    if isinstance(node, AtomicNode):
        return {"op": "atomic", **node.question.to_dict()}
    if isinstance(node, ComposeNode):
        return {"op": "compose", "outer": node_to_dict(node.outer), "inner": node_to_dict(node.inner)}
    if isinstance(node, IntersectNode):
        return {"op": "intersect", "left": node_to_dict(node.left), "right": node_to_dict(node.right)}
    if isinstance(node, CompareNode):
        return {
            "op": "compare",
            "left": node_to_dict(node.left),
            "right": node_to_dict(node.right),
            "column": node.column,
            "column_header": node.column_header,
            "cmp": node.op,
        }
    raise TypeError(f"unknown node {node!r}")


def node_from_dict(d: dict) -> ProgramNode:
    op = d.get("op")
    if op == "atomic":
        payload = {k: v for k, v in d.items() if k != "op"}
        return AtomicNode(question=AtomicQuestion.from_dict(payload))
    if op == "compose":
        return ComposeNode(outer=node_from_dict(d["outer"]), inner=node_from_dict(d["inner"]))
    if op == "intersect":
        return IntersectNode(left=node_from_dict(d["left"]), right=node_from_dict(d["right"]))
    if op == "compare":
        return CompareNode(
            left=node_from_dict(d["left"]),
            right=node_from_dict(d["right"]),
            column=d["column"],
            column_header=d.get("column_header", ""),
            op=d["cmp"],
        )
    raise ValueError(f"unknown program op '{op}'")


def node_signature(node: ProgramNode) -> str:
    """Canonical short form for hashing and duplicate detection."""
    if isinstance(node, AtomicNode):
        return node.question.id
    if isinstance(node, ComposeNode):
        return f"compose({node_signature(node.outer)},{node_signature(node.inner)})"
    if isinstance(node, IntersectNode):
        return f"intersect({node_signature(node.left)},{node_signature(node.right)})"
    if isinstance(node, CompareNode):
        return f"compare({node_signature(node.left)},{node_signature(node.right)},{node.column},{node.op})"
    raise TypeError(f"unknown node {node!r}")
