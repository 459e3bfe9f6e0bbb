"""Linking externally sourced text questions to tables through entity mentions."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..contexts.model import Table
from .tokens import tokenize, tokenize_with_spans

RC_SOURCES = ("nq", "boolq", "hotpotqa", "other")


@dataclass(frozen=True)
class RCTriple:
    """A text question with its answers and 1-2 gold paragraph ids."""

    question: str
    answers: tuple[str, ...]
    gold_paragraphs: tuple[str, ...]
    source: str = "other"

    def __post_init__(self):
        if not self.answers:
            raise ValueError("RC triple needs at least one answer")
        if not 1 <= len(self.gold_paragraphs) <= 2:
            raise ValueError("RC triple needs 1-2 gold paragraphs")

    @classmethod
    def from_dict(cls, d: dict) -> "RCTriple":
        return cls(
            question=d["question"],
            answers=tuple(d["answers"]),
            gold_paragraphs=tuple(d["gold_paragraphs"]),
            source=d.get("source", "other"),
        )

    def to_dict(self) -> dict:
        return {
            "question": self.question,
            "answers": list(self.answers),
            "gold_paragraphs": list(self.gold_paragraphs),
            "source": self.source,
        }


@dataclass(frozen=True)
class LinkResult:
    entity_title: str
    table_coords: tuple[int, int]
    match_span: tuple[int, int]


def build_entity_index(table: Table) -> dict[str, list[str]]:
    """Token sequences for every entity linked somewhere in the table."""
    return {title: tokenize(title) for title in table.linked_entity_titles()}


def link_text_question(
    triple: RCTriple,
    table: Table,
    entity_index: dict[str, list[str]] | None = None,
) -> list[LinkResult]:
    """Find every (entity, cell) pair where a table-linked entity's tokens match
    a contiguous token span of the question.

    Matching is case-insensitive on whole-token boundaries. Overlapping matches
    are resolved longest-match-first, so an entity "Age" never fires inside a
    span already claimed by "A Dangerous Age". An empty result means the
    question cannot be linked to this table.
    """
    if entity_index is None:
        entity_index = build_entity_index(table)

    q_tokens = tokenize_with_spans(triple.question)
    words = [t[0] for t in q_tokens]

    # All candidate (token_start, token_len, entity) matches.
    candidates: list[tuple[int, int, str]] = []
    for title, ent_tokens in entity_index.items():
        if not ent_tokens:
            continue
        n = len(ent_tokens)
        for start in range(0, len(words) - n + 1):
            if words[start : start + n] == ent_tokens:
                candidates.append((start, n, title))

    # Longest match wins on overlaps; ties break on earlier position.
    candidates.sort(key=lambda c: (-c[1], c[0], c[2]))
    taken: set[int] = set()
    kept: list[tuple[int, int, str]] = []
    for start, n, title in candidates:
        span = set(range(start, start + n))
        if span & taken:
            continue
        taken |= span
        kept.append((start, n, title))
    kept.sort(key=lambda c: c[0])

    results: list[LinkResult] = []
    for start, n, title in kept:
        char_span = (q_tokens[start][1], q_tokens[start + n - 1][2])
        for r, row in enumerate(table.rows):
            for c, cell in enumerate(row):
                if title in cell.links:
                    results.append(
                        LinkResult(entity_title=title, table_coords=(r, c), match_span=char_span)
                    )
    return results


def load_rc_triples(path: str | Path) -> list[RCTriple]:
    """JSON-lines triples file loader."""
    triples = []
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                triples.append(RCTriple.from_dict(json.loads(line)))
            except (json.JSONDecodeError, KeyError, ValueError) as exc:
                raise ValueError(f"{path}:{lineno}: bad RC triple ({exc})") from exc
    return triples
