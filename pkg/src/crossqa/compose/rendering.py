"""Recursive question-text rendering.

Composed questions render bottom-up: inner questions are nominalized (leading
wh-word plus auxiliary and the trailing question mark dropped) and spliced into
their parent pattern. The open-domain lead-in "In the <table> of <page>, " is
prepended exactly once, at the outermost level.
"""

from __future__ import annotations

import re

from ..contexts.columns import is_year_like
from ..contexts.model import Context
from .program import AtomicNode, CompareNode, ComposeNode, IntersectNode, Program, ProgramNode

_WH_AUX_RE = re.compile(
    r"^\s*(?:who|whom|what|which|where|when)\s+(?:is|are|was|were|did|does|do|has|have)\s+",
    re.IGNORECASE,
)
_WH_RE = re.compile(r"^\s*(?:who|whom|what|which|where|when)\s+", re.IGNORECASE)


def nominalize(question: str) -> str:
    """Turn a question into a noun-ish phrase for splicing into another question."""
    text = question.strip().rstrip("?").rstrip()
    stripped = _WH_AUX_RE.sub("", text, count=1)
    if stripped == text:
        stripped = _WH_RE.sub("", text, count=1)
    return stripped.strip()


def drop_first_word(question: str) -> str:
    parts = question.strip().split(None, 1)
    return parts[1] if len(parts) > 1 else ""


def compare_op_phrase(context: Context, column: int, op: str) -> str:
    col = context.table.columns[column]
    cells = [c.text for c in context.table.column_cells(column)]
    temporal = col.semantic_type == "date" or (
        col.semantic_type in ("numeric", "index") and is_year_like(cells)
    )
    if temporal:
        return "most recent" if op == "max" else "earliest"
    return "highest" if op == "max" else "lowest"


def substitute_mention(outer_text: str, mention: str, replacement: str) -> str:
    """Replace the (single) entity mention in the outer question, matching
    case-insensitively on word boundaries."""
    pattern = re.compile(r"\b" + re.escape(mention) + r"\b", re.IGNORECASE)
    replaced, n = pattern.subn(replacement, outer_text, count=1)
    if n == 0:
        raise ValueError(f"mention '{mention}' not found in outer question text")
    return replaced


def render_node(node: ProgramNode, context: Context) -> str:
    if isinstance(node, AtomicNode):
        return node.question.core_text
    if isinstance(node, ComposeNode):
        outer_leaves = node.outer
        if not isinstance(outer_leaves, AtomicNode):
            raise ValueError("compose outer must be an atomic question")
        outer_q = outer_leaves.question
        if len(outer_q.mentions) != 1:
            raise ValueError("compose outer must mention exactly one entity")
        inner_text = nominalize(render_node(node.inner, context))
        return substitute_mention(outer_q.core_text, outer_q.mentions[0], inner_text)
    if isinstance(node, IntersectNode):
        left = render_node(node.left, context).strip().rstrip("?").rstrip()
        right = drop_first_word(render_node(node.right, context))
        return f"{left} and {right}"
    if isinstance(node, CompareNode):
        op_phrase = compare_op_phrase(context, node.column, node.op)
        left = nominalize(render_node(node.left, context))
        right = nominalize(render_node(node.right, context))
        return f"What has {op_phrase} {node.column_header}, {left}, or {right}?"
    raise TypeError(f"unknown node {node!r}")


def open_domain_prefix(context: Context) -> str:
    table = context.table
    return f"In the {table.table_title} of {table.page_title}, "


def render_pl(program: Program, context: Context) -> str:
    """Full question text with the open-domain lead-in applied once."""
    return open_domain_prefix(context) + render_node(program.node, context)
