"""Ingestion of human-authored image questions and externally sourced text questions."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from ..contexts.model import Context
from ..linking.entity_images import map_entity_images
from ..linking.question_links import LinkResult, RCTriple, link_text_question
from .model import Anchors, AnswerList, AtomicQuestion


class IngestError(ValueError):
    pass


@dataclass(frozen=True)
class SkippedQuestion:
    question: str
    reason: str


def load_vocabulary(path: str | Path) -> set[str]:
    """Newline-delimited single-image answer vocabulary."""
    vocab: set[str] = set()
    with open(path, encoding="utf-8") as f:
        for line in f:
            token = line.strip()
            if token and not token.startswith("#"):
                vocab.add(token.lower())
    return vocab


def load_image_bank(path: str | Path) -> list[dict]:
    records = []
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                records.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise IngestError(f"{path}:{lineno}: bad JSON ({exc})") from exc
    return records


def _column_entity_titles(context: Context, col_pos: int) -> list[str]:
    titles: list[str] = []
    seen = set()
    for cell in context.table.column_cells(col_pos):
        for t in cell.links:
            if t not in seen:
                seen.add(t)
                titles.append(t)
    return titles


def ingest_image_questions(
    records: list[dict],
    context: Context,
    vocabulary: set[str],
    blocklist: set[str] | frozenset[str] = frozenset(),
) -> list[AtomicQuestion]:
    """Validate and wrap image-bank records anchored to this context.

    Single-image records answer with one vocabulary token about one image;
    list records answer with a subset of the anchored column's entities.
    Records for other contexts are ignored; invalid ones raise IngestError.
    """
    questions = []
    for rec in records:
        rid = rec.get("id", "?")
        kind = rec.get("kind")
        if kind not in ("single", "list"):
            raise IngestError(f"image bank record {rid}: kind must be single or list")

        if kind == "single":
            image_ids = rec.get("image_ids", [])
            if len(image_ids) != 1:
                raise IngestError(f"image bank record {rid}: single-image records need one image id")
            image = context.image_by_id(image_ids[0])
            if image is None:
                if rec.get("context") and rec["context"] != context.context_id:
                    continue
                raise IngestError(f"image bank record {rid}: unknown image id '{image_ids[0]}'")
            if rec.get("context") and rec["context"] != context.context_id:
                continue
            answers = rec.get("answers", [])
            if len(answers) != 1:
                raise IngestError(f"image bank record {rid}: single-image questions take one answer")
            if answers[0].lower() not in vocabulary:
                raise IngestError(
                    f"image bank record {rid}: answer '{answers[0]}' not in vocabulary"
                )
            focus = rec.get("entity_focus")
            mentions: tuple[str, ...] = ()
            if focus:
                if context.entity_by_title(focus) is None:
                    raise IngestError(f"image bank record {rid}: unknown entity_focus '{focus}'")
                mentions = (focus,)
            questions.append(
                AtomicQuestion(
                    id=rid,
                    modality="image",
                    pl_text=rec["question"],
                    core_text=rec["question"],
                    answers=AnswerList(values=(answers[0],)),
                    anchors=Anchors(images=(image.id,)),
                    answer_kind="string",
                    mentions=mentions,
                )
            )
        else:
            if rec.get("context") != context.context_id:
                continue
            anchor = rec.get("column_anchor")
            column = context.table.column_by_header(anchor or "")
            if column is None:
                raise IngestError(f"image bank record {rid}: unknown column_anchor '{anchor}'")
            column_titles = _column_entity_titles(context, column.position)
            answers = rec.get("answers", [])
            if not answers:
                raise IngestError(f"image bank record {rid}: empty answers")
            for a in answers:
                if a not in column_titles:
                    raise IngestError(
                        f"image bank record {rid}: answer '{a}' not an entity of column '{anchor}'"
                    )
            entity_images = map_entity_images(context.entities, blocklist)
            image_ids = tuple(
                entity_images[t].id for t in column_titles if t in entity_images
            )
            questions.append(
                AtomicQuestion(
                    id=rid,
                    modality="image_list",
                    pl_text=rec["question"],
                    core_text=rec["question"],
                    answers=AnswerList(values=tuple(answers), entity_titles=tuple(answers)),
                    anchors=Anchors(columns=(column.position,), images=image_ids),
                    answer_kind="entity",
                    mentions=(),
                )
            )
    return questions


def ingest_text_questions(
    triples: list[RCTriple],
    context: Context,
    links_by_triple: list[list[LinkResult]] | None = None,
) -> tuple[list[AtomicQuestion], list[SkippedQuestion]]:
    """Wrap table-linked RC triples as text questions anchored to their gold
    paragraphs. Triples that do not link into this context's table (or whose
    gold paragraphs are not attached to the context) are reported and skipped."""
    corpus_titles = {e.title for e in context.entities}
    questions = []
    skipped = []
    for i, triple in enumerate(triples):
        links = links_by_triple[i] if links_by_triple is not None else None
        if links is None:
            links = link_text_question(triple, context.table)
        if not links:
            skipped.append(SkippedQuestion(triple.question, "no table link"))
            continue
        missing = [p for p in triple.gold_paragraphs if context.paragraph_by_id(p) is None]
        if missing:
            skipped.append(
                SkippedQuestion(triple.question, f"gold paragraphs not in context: {missing}")
            )
            continue

        entity_kind = all(a in corpus_titles for a in triple.answers)
        answers = AnswerList(
            values=triple.answers,
            entity_titles=triple.answers if entity_kind else None,
        )
        mentions = []
        for link in links:
            if link.entity_title not in mentions:
                mentions.append(link.entity_title)
        qid = "txt-" + hashlib.sha1(
            f"{context.context_id}\x1f{triple.question}".encode("utf-8")
        ).hexdigest()[:10]
        questions.append(
            AtomicQuestion(
                id=qid,
                modality="text",
                pl_text=triple.question,
                core_text=triple.question,
                answers=answers,
                anchors=Anchors(paragraphs=triple.gold_paragraphs),
                answer_kind="entity" if entity_kind else "string",
                mentions=tuple(mentions),
            )
        )
    return questions, skipped
