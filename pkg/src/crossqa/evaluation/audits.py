"""Multi-hop necessity audits: weak distractors and redundant evidence."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..atomic.table_questions import eval_superlative, norm_cell, select_rows
from ..contexts.columns import ordering_key, parse_date, parse_number
from ..compose.program import AtomicNode, CompareNode, ComposeNode, IntersectNode
from .normalize import normalize_answer

_YEAR_RE = re.compile(r"\b(1[0-9]{3}|2[0-9]{3})\b")
_NUMBER_RE = re.compile(r"\b\d+(?:,\d{3})*(?:\.\d+)?\b")
_DATE_RE = re.compile(
    r"\b(?:[A-Z][a-z]+\.?\s+\d{1,2},?\s+\d{4}|\d{1,2}\s+[A-Z][a-z]+\.?\s+\d{4}|\d{4}-\d{1,2}-\d{1,2})\b"
)


@dataclass(frozen=True)
class AuditFlag:
    qid: str
    kind: str  # weak_distractors | redundant_evidence
    evidence: str


def _answer_class(values) -> str | None:
    """year, date, or number when every answer fits the class, else None."""
    if all(re.fullmatch(r"[12]\d{3}", v.strip()) for v in values):
        return "year"
    dates = [parse_date(v) for v in values]
    if all(d is not None and d.explicit for d in dates):
        return "date"
    if all(parse_number(v) is not None for v in values):
        return "number"
    return None


def _context_texts(example) -> list[str]:
    texts = []
    for row in example.context.table.rows:
        for cell in row:
            texts.append(cell.text)
    for para in example.context.paragraphs:
        texts.append(para.text)
    return texts


def _distinct_instances(texts: list[str], kind: str) -> set[str]:
    found: set[str] = set()
    for text in texts:
        if kind == "year":
            found.update(_YEAR_RE.findall(text))
        elif kind == "date":
            for m in _DATE_RE.findall(text):
                d = parse_date(m)
                if d is not None:
                    found.add(f"{d.year}-{d.month:02d}-{d.day:02d}")
            # A bare cell that is exactly a date also counts.
            d = parse_date(text)
            if d is not None and d.explicit:
                found.add(f"{d.year}-{d.month:02d}-{d.day:02d}")
        else:
            for m in _NUMBER_RE.findall(text):
                n = parse_number(m)
                if n is not None:
                    found.add(repr(n))
    return found


def detect_weak_distractors(example) -> AuditFlag | None:
    """Flag questions whose typed answer class (year/date/number) has a single
    distinct instance anywhere in the assembled context."""
    kind = _answer_class(example.answers.values)
    if kind is None:
        return None
    instances = _distinct_instances(_context_texts(example), kind)
    if len(instances) == 1:
        return AuditFlag(
            qid=example.qid,
            kind="weak_distractors",
            evidence=f"answer class '{kind}' has a single instance in the context: {sorted(instances)}",
        )
    return None


def _table_predicate_answers(table, predicate: dict, value: str) -> list[str]:
    if predicate["kind"] == "lookup":
        rows = select_rows(table, predicate["condition"], value)
        return [table.rows[r][predicate["target"]].text for r in rows]
    rows = eval_superlative(
        table, predicate["value_col"], predicate["op"], predicate["condition"], value
    )
    return [table.rows[r][predicate["value_col"]].text for r in rows]


def _normalized_multiset(values) -> tuple[str, ...]:
    return tuple(sorted(normalize_answer(v) for v in values))


def detect_redundant_evidence(example) -> AuditFlag | None:
    """Flag two-constraint questions where one constraint alone already pins the
    final answer (brute-forced over the context's table)."""
    node = example.program.node
    final = _normalized_multiset(example.answers.values)
    table = example.context.table

    if isinstance(node, IntersectNode):
        for side, child in (("left", node.left), ("right", node.right)):
            if isinstance(child, AtomicNode):
                child_set = _normalized_multiset(child.question.answers.titles)
                if child_set == final:
                    return AuditFlag(
                        qid=example.qid,
                        kind="redundant_evidence",
                        evidence=f"the {side} child alone already answers the question",
                    )
        return None

    if isinstance(node, ComposeNode):
        outer = node.outer
        if not isinstance(outer, AtomicNode) or outer.question.modality != "table":
            return None
        predicate = outer.question.anchors.predicate
        if not predicate:
            return None
        cond = predicate.get("condition")
        if cond is None:
            return None
        seen = set()
        candidate_values = []
        for row in table.rows:
            text = row[cond].text
            key = norm_cell(text)
            if text.strip() and key not in seen:
                seen.add(key)
                candidate_values.append(text)
        results = []
        for value in candidate_values:
            answers = _table_predicate_answers(table, predicate, value)
            if answers:
                results.append(_normalized_multiset(answers))
        if results and all(r == final for r in results):
            return AuditFlag(
                qid=example.qid,
                kind="redundant_evidence",
                evidence="the table constraint yields the same answer for every possible bridge",
            )
        return None

    if isinstance(node, CompareNode):
        winner = example.answers.values[0]
        semantic = table.columns[node.column].semantic_type
        keyed = []
        for r in range(table.n_rows):
            key = ordering_key(table.rows[r][node.column].text, semantic)
            if key is not None:
                keyed.append((r, key))
        if not keyed:
            return None
        best = max(k for _, k in keyed) if node.op == "max" else min(k for _, k in keyed)
        best_rows = [r for r, k in keyed if k == best]
        if len(best_rows) != 1:
            return None
        row = best_rows[0]
        winner_norm = normalize_answer(winner)
        row_entities = {t for cell in table.rows[row] for t in cell.links}
        if any(normalize_answer(t) == winner_norm for t in row_entities):
            return AuditFlag(
                qid=example.qid,
                kind="redundant_evidence",
                evidence=(
                    f"the answer uniquely attains the column-wide {node.op} of "
                    f"'{node.column_header}', so the two sub-questions are decorative"
                ),
            )
        return None

    return None
