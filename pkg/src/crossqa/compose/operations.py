"""Builders for the three combining operations, with generation-time validation."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from ..atomic.model import AnswerList, AtomicQuestion
from ..contexts.model import Context
from .execution import ExecutionError, execute
from .program import (
    AtomicNode,
    CompareNode,
    ComposeNode,
    IntersectNode,
    MODALITY_LABELS,
    Program,
    node_signature,
)
from .rendering import render_pl


class CandidateRejected(ValueError):
    """A structurally valid pairing that fails an operation's preconditions."""


@dataclass(frozen=True)
class ComposedQuestion:
    qid: str
    context_id: str
    program: Program
    pl_text: str
    answers: AnswerList
    intermediate_answers: AnswerList | None
    modalities_used: tuple[str, ...]

    @property
    def question_type(self) -> str:
        return self.program.question_type

    @property
    def multimodal(self) -> bool:
        return len(self.modalities_used) >= 2

    @property
    def compositional(self) -> bool:
        return not self.program.is_atomic


def _qid(context_id: str, label: str, signature: str) -> str:
    h = hashlib.sha1(f"{context_id}\x1f{label}\x1f{signature}".encode("utf-8")).hexdigest()
    return "q-" + h[:12]


def _build(context: Context, program: Program) -> ComposedQuestion:
    result = execute(program, context)
    return ComposedQuestion(
        qid=_qid(context.context_id, program.question_type, node_signature(program.node)),
        context_id=context.context_id,
        program=program,
        pl_text=render_pl(program, context),
        answers=result.answers,
        intermediate_answers=result.intermediate,
        modalities_used=program.modalities_used(),
    )


def atomic_question(atomic: AtomicQuestion, context: Context) -> ComposedQuestion:
    label = MODALITY_LABELS[atomic.modality]
    return _build(context, Program(node=AtomicNode(atomic), question_type=label))


def compose(
    outer: AtomicQuestion, inner: AtomicQuestion, context: Context
) -> ComposedQuestion:
    """Bridge the outer question's single entity mention through the inner question."""
    if len(outer.mentions) != 1:
        raise CandidateRejected(
            f"compose outer must mention exactly one entity, has {len(outer.mentions)}"
        )
    mention = outer.mentions[0]
    if inner.answer_kind != "entity" or inner.answers.entity_titles is None:
        raise CandidateRejected("compose inner must answer with entities")
    if len(inner.answers) != 1:
        raise CandidateRejected("compose inner must answer a single entity")
    if inner.answers.entity_titles[0] != mention:
        raise CandidateRejected(
            f"compose inner answers '{inner.answers.entity_titles[0]}', outer mentions '{mention}'"
        )
    label = f"Compose({MODALITY_LABELS[outer.modality]},{MODALITY_LABELS[inner.modality]})"
    program = Program(
        node=ComposeNode(outer=AtomicNode(outer), inner=AtomicNode(inner)),
        question_type=label,
    )
    return _build(context, program)


def intersect(
    left: AtomicQuestion, right: AtomicQuestion, context: Context
) -> ComposedQuestion:
    """Conjunction of two entity-list questions; the answer is their overlap."""
    for side, q in (("left", left), ("right", right)):
        if q.answer_kind != "entity" or q.answers.entity_titles is None:
            raise CandidateRejected(f"intersect {side} child must answer with entities")
        if len(q.answers) <= 1:
            raise CandidateRejected(f"intersect {side} child must answer more than one entity")
    label = f"Intersect({MODALITY_LABELS[left.modality]},{MODALITY_LABELS[right.modality]})"
    program = Program(
        node=IntersectNode(left=AtomicNode(left), right=AtomicNode(right)),
        question_type=label,
    )
    try:
        return _build(context, program)
    except ExecutionError as exc:
        raise CandidateRejected(str(exc)) from exc


def compare(
    left: AtomicQuestion,
    right: AtomicQuestion,
    column: int,
    op: str,
    context: Context,
) -> ComposedQuestion:
    """Pick one of two single-entity questions by a date/numeric column value."""
    if op not in ("min", "max"):
        raise ValueError("op must be min or max")
    col = context.table.columns[column]
    if col.semantic_type not in ("date", "numeric"):
        raise CandidateRejected(f"compare column must be date or numeric, got {col.semantic_type}")
    for side, q in (("left", left), ("right", right)):
        if q.answer_kind != "entity" or q.answers.entity_titles is None:
            raise CandidateRejected(f"compare {side} child must answer with an entity")
        if len(q.answers) != 1:
            raise CandidateRejected(f"compare {side} child must answer exactly one entity")
    if left.answers.entity_titles[0] == right.answers.entity_titles[0]:
        raise CandidateRejected("compare children answer the same entity")
    label = f"Compare({MODALITY_LABELS[left.modality]},{MODALITY_LABELS[right.modality]})"
    program = Program(
        node=CompareNode(
            left=AtomicNode(left),
            right=AtomicNode(right),
            column=column,
            column_header=col.header,
            op=op,
        ),
        question_type=label,
    )
    try:
        return _build(context, program)
    except ExecutionError as exc:
        raise CandidateRejected(str(exc)) from exc
