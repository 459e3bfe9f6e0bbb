"""Template instantiation: enumerate, validate, execute, and keep candidates."""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..atomic.model import AtomicQuestion
from ..contexts.model import Context
from ..evaluation.normalize import normalize_answer
from .execution import ExecutionError, resolve_entity_row
from .operations import (
    CandidateRejected,
    ComposedQuestion,
    atomic_question,
    compare,
    compose,
    intersect,
)
from .question_types import QuestionType, default_registry


@dataclass(frozen=True)
class InstantiateConfig:
    seed: int = 0
    per_template_cap: int = 4


DEFAULT_INSTANTIATE_CONFIG = InstantiateConfig()


def _degenerate(question: ComposedQuestion) -> bool:
    """Self-answering guard: the final answer already appears in the question text."""
    text = normalize_answer(question.pl_text)
    for value in question.answers.values:
        normalized = normalize_answer(value)
        if normalized and normalized in text:
            return True
    return False


def _resolves_to_one_row(context: Context, q: AtomicQuestion) -> bool:
    if q.answer_kind != "entity" or q.answers.entity_titles is None or len(q.answers) != 1:
        return False
    try:
        resolve_entity_row(context, q.answers.entity_titles[0])
    except ExecutionError:
        return False
    return True


def _entity_list_questions(pool: list[AtomicQuestion]) -> list[AtomicQuestion]:
    return [
        q
        for q in pool
        if q.answer_kind == "entity" and q.answers.entity_titles is not None and len(q.answers) > 1
    ]


def instantiate_templates(
    context: Context,
    atomics: list[AtomicQuestion],
    registry: dict[str, QuestionType] | None = None,
    config: InstantiateConfig = DEFAULT_INSTANTIATE_CONFIG,
) -> list[ComposedQuestion]:
    """All registry templates instantiated over one context's atomic questions.

    Enumeration order is canonical (registry order, then sorted child ids and
    column positions), candidates per template are capped by a seeded sample,
    and self-answering candidates are dropped, so output is deterministic for
    a fixed seed.
    """
    registry = registry if registry is not None else default_registry()
    by_modality: dict[str, list[AtomicQuestion]] = {}
    for q in sorted(atomics, key=lambda a: a.id):
        by_modality.setdefault(q.modality, []).append(q)

    compare_columns = [
        c.position for c in context.table.columns if c.semantic_type in ("date", "numeric")
    ]

    out: list[ComposedQuestion] = []
    seen_qids: set[str] = set()
    for label, qt in registry.items():
        candidates: list[ComposedQuestion] = []

        if qt.operation == "atomic":
            for q in by_modality.get(qt.slots[0], []):
                candidates.append(atomic_question(q, context))

        elif qt.operation == "compose":
            outer_mod, inner_mod = qt.slots
            outers = [q for q in by_modality.get(outer_mod, []) if len(q.mentions) == 1]
            inners = [
                q
                for q in by_modality.get(inner_mod, [])
                if q.answer_kind == "entity" and len(q.answers) == 1
            ]
            for outer in outers:
                for inner in inners:
                    if outer.id == inner.id:
                        continue
                    try:
                        candidates.append(compose(outer, inner, context))
                    except CandidateRejected:
                        continue

        elif qt.operation == "intersect":
            lefts = _entity_list_questions(by_modality.get(qt.slots[0], []))
            rights = _entity_list_questions(by_modality.get(qt.slots[1], []))
            for left in lefts:
                for right in rights:
                    if left.id == right.id:
                        continue
                    try:
                        candidates.append(intersect(left, right, context))
                    except CandidateRejected:
                        continue

        elif qt.operation == "compare":
            lefts = [q for q in by_modality.get(qt.slots[0], []) if _resolves_to_one_row(context, q)]
            rights = [q for q in by_modality.get(qt.slots[1], []) if _resolves_to_one_row(context, q)]
            for left in lefts:
                for right in rights:
                    if left.id == right.id:
                        continue
                    for column in compare_columns:
                        for op in ("min", "max"):
                            try:
                                candidates.append(compare(left, right, column, op, context))
                            except CandidateRejected:
                                continue
        else:
            raise ValueError(f"registry label '{label}' has unknown operation '{qt.operation}'")

        candidates = [c for c in candidates if not _degenerate(c)]

        if len(candidates) > config.per_template_cap:
            rng = random.Random(f"{config.seed}|{label}|{context.context_id}")
            picked = sorted(rng.sample(range(len(candidates)), config.per_template_cap))
            candidates = [candidates[i] for i in picked]

        for c in candidates:
            if c.qid not in seen_qids:
                seen_qids.add(c.qid)
                out.append(c)
    return out
