"""Program execution over a context, using leaf gold answers as leaf values."""

from __future__ import annotations

from dataclasses import dataclass

from ..atomic.model import AnswerList
from ..contexts.columns import ordering_key
from ..contexts.model import Context
from .program import AtomicNode, CompareNode, ComposeNode, IntersectNode, Program, ProgramNode


class ExecutionError(ValueError):
    pass


@dataclass(frozen=True)
class ExecutionResult:
    answers: AnswerList
    intermediate: AnswerList | None = None


def resolve_entity_row(context: Context, title: str) -> int:
    """The unique table row whose cells link the entity, else ExecutionError."""
    rows = set()
    for r, row in enumerate(context.table.rows):
        for cell in row:
            if title in cell.links:
                rows.add(r)
    if len(rows) != 1:
        raise ExecutionError(
            f"entity '{title}' resolves to {len(rows)} table rows, need exactly 1"
        )
    return next(iter(rows))


def resolve_compare(
    context: Context, left_title: str, right_title: str, column: int, op: str
) -> str:
    """Pick the entity whose row attains op over the column. Identical entities
    compare against themselves and win trivially; equal values on distinct rows
    are a tie and an error."""
    if left_title == right_title:
        return left_title
    lr = resolve_entity_row(context, left_title)
    rr = resolve_entity_row(context, right_title)
    semantic = context.table.columns[column].semantic_type
    lk = ordering_key(context.table.rows[lr][column].text, semantic)
    rk = ordering_key(context.table.rows[rr][column].text, semantic)
    if lk is None or rk is None:
        raise ExecutionError(f"column {column} value does not parse for comparison")
    if lk == rk:
        raise ExecutionError("tie in compared values")
    if op == "max":
        return left_title if lk > rk else right_title
    return left_title if lk < rk else right_title


def execute_node(node: ProgramNode, context: Context) -> ExecutionResult:
    if isinstance(node, AtomicNode):
        return ExecutionResult(answers=node.question.answers)

    if isinstance(node, ComposeNode):
        inner = execute_node(node.inner, context)
        if len(inner.answers) != 1:
            raise ExecutionError("compose requires a single bridging entity")
        outer = execute_node(node.outer, context)
        return ExecutionResult(answers=outer.answers, intermediate=inner.answers)

    if isinstance(node, IntersectNode):
        left = execute_node(node.left, context)
        right = execute_node(node.right, context)
        right_titles = set(right.answers.titles)
        common = tuple(t for t in left.answers.titles if t in right_titles)
        if not common:
            raise ExecutionError("empty intersection")
        return ExecutionResult(
            answers=AnswerList(values=common, entity_titles=common),
            intermediate=left.answers,
        )

    if isinstance(node, CompareNode):
        left = execute_node(node.left, context)
        right = execute_node(node.right, context)
        if len(left.answers) != 1 or len(right.answers) != 1:
            raise ExecutionError("compare children must answer exactly one entity")
        winner = resolve_compare(
            context, left.answers.titles[0], right.answers.titles[0], node.column, node.op
        )
        return ExecutionResult(
            answers=AnswerList(values=(winner,), entity_titles=(winner,)),
            intermediate=left.answers,
        )

    raise TypeError(f"unknown node {node!r}")


def execute(program: Program, context: Context) -> ExecutionResult:
    """Answers plus hop-1 intermediates (None for atomic programs)."""
    return execute_node(program.node, context)
