"""Text distractor selection under the context-assembly constraints.

Every assembled context carries exactly 10 paragraphs: 1-2 gold and the rest
top-scored distractors. A distractor may not come from a gold paragraph's
article, may not contain any gold answer string (normalized containment), and
may not have been used as a distractor in the other split partition.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from ..contexts.model import ImageRef, Paragraph, Table, WikiEntity
from ..evaluation.normalize import normalize_answer
from .scorers import RetrievalScorer, score_batch

CONTEXT_PARAGRAPHS = 10


class InsufficientPoolError(ValueError):
    pass


class PartitionLedger:
    """Tracks distractor ids per partition (train vs eval) for disjointness.

    Mutations are serialized; reads take the same lock since selection commits
    one example at a time.
    """

    PARTITIONS = ("train", "eval")

    def __init__(self):
        self._used: dict[str, set[str]] = {p: set() for p in self.PARTITIONS}
        self._lock = threading.Lock()

    @staticmethod
    def partition_for_split(split: str) -> str:
        return "train" if split == "train" else "eval"

    def excluded_for(self, partition: str) -> set[str]:
        other = "eval" if partition == "train" else "train"
        with self._lock:
            return set(self._used[other])

    def record(self, partition: str, ids: list[str]) -> None:
        with self._lock:
            self._used[partition].update(ids)

    def used(self, partition: str) -> set[str]:
        with self._lock:
            return set(self._used[partition])


@dataclass(frozen=True)
class RoleImage:
    ref: ImageRef
    role: str  # gold | distractor

    def to_dict(self) -> dict:
        return {**self.ref.to_dict(), "role": self.role}

    @classmethod
    def from_dict(cls, d: dict) -> "RoleImage":
        role = d.get("role", "gold")
        ref = ImageRef.from_dict({k: v for k, v in d.items() if k != "role"})
        return cls(ref=ref, role=role)


@dataclass(frozen=True)
class AssembledContext:
    context_id: str
    table: Table
    paragraphs: tuple[Paragraph, ...]
    images: tuple[RoleImage, ...]
    entities: tuple[WikiEntity, ...] = ()

    def gold_paragraphs(self) -> list[Paragraph]:
        return [p for p in self.paragraphs if p.role == "gold"]

    def distractor_paragraphs(self) -> list[Paragraph]:
        return [p for p in self.paragraphs if p.role == "distractor"]

    def gold_images(self) -> list[ImageRef]:
        return [ri.ref for ri in self.images if ri.role == "gold"]

    def distractor_images(self) -> list[ImageRef]:
        return [ri.ref for ri in self.images if ri.role == "distractor"]

    def to_dict(self) -> dict:
        return {
            "context_id": self.context_id,
            "table": self.table.to_dict(),
            "paragraphs": [p.to_dict() for p in self.paragraphs],
            "images": [ri.to_dict() for ri in self.images],
            "entities": [e.to_dict() for e in self.entities],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AssembledContext":
        return cls(
            context_id=d.get("context_id", ""),
            table=Table.from_dict(d["table"]),
            paragraphs=tuple(Paragraph.from_dict(p) for p in d.get("paragraphs", ())),
            images=tuple(RoleImage.from_dict(i) for i in d.get("images", ())),
            entities=tuple(WikiEntity.from_dict(e) for e in d.get("entities", ())),
        )


def leaks_answer(paragraph_text: str, answers: list[str] | tuple[str, ...]) -> bool:
    """Normalized substring containment of any gold answer in the paragraph."""
    haystack = normalize_answer(paragraph_text)
    for answer in answers:
        needle = normalize_answer(answer)
        if needle and needle in haystack:
            return True
    return False


def select_text_distractors(
    question_text: str,
    gold: list[Paragraph],
    pool: list[Paragraph],
    answers: list[str] | tuple[str, ...],
    scorer: RetrievalScorer,
    ledger: PartitionLedger,
    partition: str,
) -> list[Paragraph]:
    """The example's 10 paragraphs: gold first, then top-scored eligible distractors."""
    if not 1 <= len(gold) <= 2:
        raise ValueError(f"need 1-2 gold paragraphs, got {len(gold)}")
    gold_ids = [p.id for p in gold]
    if len(set(gold_ids)) != len(gold_ids):
        raise ValueError(f"duplicate gold paragraph ids: {gold_ids}")
    gold_articles = {p.article_title for p in gold}
    excluded_ids = ledger.excluded_for(partition)

    seen: set[str] = set()
    eligible: list[Paragraph] = []
    for p in pool:
        if p.id in seen:
            continue
        seen.add(p.id)
        if p.id in gold_ids or p.id in excluded_ids:
            continue
        if p.article_title in gold_articles:
            continue
        if leaks_answer(p.text, answers):
            continue
        eligible.append(p)

    needed = CONTEXT_PARAGRAPHS - len(gold)
    if len(eligible) < needed:
        raise InsufficientPoolError(
            f"only {len(eligible)} eligible distractors, need {needed}"
        )

    scores = score_batch(scorer, question_text, [p.text for p in eligible])
    ranked = sorted(zip(eligible, scores), key=lambda ps: (-ps[1], ps[0].id))
    chosen = [p for p, _ in ranked[:needed]]
    ledger.record(partition, [p.id for p in chosen])

    return [p.with_role("gold") for p in gold] + [p.with_role("distractor") for p in chosen]
