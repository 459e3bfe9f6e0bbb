"""Table question generation: value lookups and superlatives.

Both generators compute their answers by direct predicate evaluation against
the table, so every emitted question is self-consistent by construction. Row
selection compares cells under light normalization (casefold, collapsed
whitespace); the surface string shown in the question is the first matching
cell's original text.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from ..contexts.columns import is_year_like, ordering_key
from ..contexts.model import Cell, Table
from .model import Anchors, AnswerList, AtomicQuestion


@dataclass(frozen=True)
class TableGenConfig:
    max_lookup_questions: int = 50
    max_condition_row_fraction: float = 0.6  # near-constant condition values are skipped
    seed: int = 0


DEFAULT_TABLE_GEN_CONFIG = TableGenConfig()


def norm_cell(text: str) -> str:
    return " ".join(text.split()).casefold()


def resolve_cell_entity(cell: Cell) -> str | None:
    """The entity a cell stands for: a link matching its text, else a sole link."""
    for title in cell.links:
        if title == cell.text:
            return title
    if len(cell.links) == 1:
        return cell.links[0]
    return None


def _short_hash(*parts: str) -> str:
    h = hashlib.sha1("\x1f".join(parts).encode("utf-8")).hexdigest()
    return h[:10]


def _answers_from_cells(cells: list[Cell]) -> AnswerList:
    values = tuple(c.text for c in cells)
    titles = [resolve_cell_entity(c) for c in cells]
    if all(t is not None for t in titles):
        return AnswerList(values=values, entity_titles=tuple(titles))  # type: ignore[arg-type]
    return AnswerList(values=values)


def _mention_for_value(table: Table, cond_pos: int, rows: list[int], value: str) -> tuple[str, ...]:
    """Entity mention carried by a condition value, when the matching condition
    cells link an entity with exactly that title."""
    for r in rows:
        cell = table.rows[r][cond_pos]
        for title in cell.links:
            if title == value:
                return (title,)
    return ()


def superlative_word(table: Table, col_pos: int, op: str) -> str:
    col = table.columns[col_pos]
    cells = [c.text for c in table.column_cells(col_pos)]
    temporal = col.semantic_type == "date" or (
        col.semantic_type in ("numeric", "index") and is_year_like(cells)
    )
    if temporal:
        return "MOST RECENT" if op == "max" else "EARLIEST"
    return "HIGHEST" if op == "max" else "LOWEST"


def select_rows(table: Table, condition: int, value: str) -> list[int]:
    """Row indices where the condition column equals the value (normalized)."""
    wanted = norm_cell(value)
    return [r for r in range(table.n_rows) if norm_cell(table.rows[r][condition].text) == wanted]


def eval_lookup(table: Table, target: int, condition: int, value: str) -> list[int]:
    """Rows a lookup predicate selects; target column is read by the caller."""
    del target
    return select_rows(table, condition, value)


def eval_superlative(
    table: Table,
    value_col: int,
    op: str,
    condition: int | None = None,
    condition_value: str | None = None,
) -> list[int]:
    """Row indices attaining the extremum of value_col among (filtered) rows.

    Rows whose value cell does not parse under the column's semantic type are
    ignored. Returns [] when nothing is comparable.
    """
    semantic = table.columns[value_col].semantic_type
    rows = range(table.n_rows)
    if condition is not None and condition_value is not None:
        rows = select_rows(table, condition, condition_value)  # type: ignore[assignment]
    keyed = []
    for r in rows:
        key = ordering_key(table.rows[r][value_col].text, semantic)
        if key is not None:
            keyed.append((r, key))
    if not keyed:
        return []
    best = max(k for _, k in keyed) if op == "max" else min(k for _, k in keyed)
    return [r for r, k in keyed if k == best]


def gen_table_lookup_questions(
    table: Table,
    context_id: str = "",
    config: TableGenConfig = DEFAULT_TABLE_GEN_CONFIG,
) -> list[AtomicQuestion]:
    """Questions of the form "which cells in X have the Y in Z".

    One-column tables yield nothing. Candidate (X, Z, Y) triples are
    deterministically shuffled under the config seed and capped.
    """
    if table.n_columns < 2 or table.n_rows == 0:
        return []

    candidates: list[tuple[int, int, str, list[int]]] = []
    max_rows = config.max_condition_row_fraction * table.n_rows
    for cond in range(table.n_columns):
        # Distinct condition values in first-appearance order.
        groups: dict[str, list[int]] = {}
        surface: dict[str, str] = {}
        for r in range(table.n_rows):
            text = table.rows[r][cond].text
            if not text.strip():
                continue
            key = norm_cell(text)
            groups.setdefault(key, []).append(r)
            surface.setdefault(key, text)
        for key, rows in groups.items():
            if len(rows) > max_rows:
                continue
            for target in range(table.n_columns):
                if target == cond:
                    continue
                if any(not table.rows[r][target].text.strip() for r in rows):
                    continue
                candidates.append((target, cond, surface[key], rows))

    rng = random.Random(config.seed)
    rng.shuffle(candidates)
    candidates = candidates[: config.max_lookup_questions]
    candidates.sort(key=lambda c: (c[1], c[0], norm_cell(c[2])))

    questions = []
    for target, cond, value, rows in candidates:
        x, z = table.columns[target], table.columns[cond]
        cells = [table.rows[r][target] for r in rows]
        core = f"which cells in {x.header} have the {value} in {z.header}?"
        pl = f"In {table.table_title} of {table.page_title} {core}"
        answers = _answers_from_cells(cells)
        qid = "tbl-" + _short_hash(context_id, "lookup", str(target), str(cond), norm_cell(value))
        questions.append(
            AtomicQuestion(
                id=qid,
                modality="table",
                pl_text=pl,
                core_text=core,
                answers=answers,
                anchors=Anchors(
                    columns=(target, cond),
                    cells=tuple((r, target) for r in rows),
                    predicate={
                        "kind": "lookup",
                        "target": target,
                        "condition": cond,
                        "value": value,
                    },
                ),
                answer_kind="entity" if answers.entity_titles is not None else "string",
                mentions=_mention_for_value(table, cond, rows, value),
            )
        )
    return questions


def gen_table_superlative_questions(
    table: Table,
    context_id: str = "",
    config: TableGenConfig = DEFAULT_TABLE_GEN_CONFIG,
) -> list[AtomicQuestion]:
    """MIN/MAX questions over date and numeric columns, optionally filtered by a
    condition column value. Date-like columns render EARLIEST / MOST RECENT,
    plain numeric columns LOWEST / HIGHEST. Ties are all returned."""
    value_cols = [
        c.position for c in table.columns if c.semantic_type in ("date", "numeric", "index")
    ]
    if not value_cols or table.n_rows == 0:
        return []

    max_rows = config.max_condition_row_fraction * table.n_rows
    questions = []
    for vc in value_cols:
        col = table.columns[vc]
        conditions: list[tuple[int | None, str | None, list[int] | None]] = [(None, None, None)]
        for cond in range(table.n_columns):
            if cond == vc:
                continue
            groups: dict[str, tuple[str, list[int]]] = {}
            for r in range(table.n_rows):
                text = table.rows[r][cond].text
                if not text.strip():
                    continue
                key = norm_cell(text)
                if key not in groups:
                    groups[key] = (text, [r])
                else:
                    groups[key][1].append(r)
            for _, (surface_value, rows) in sorted(groups.items()):
                if len(rows) < 2 or len(rows) > max_rows:
                    continue
                conditions.append((cond, surface_value, rows))

        for cond, cond_value, cond_rows in conditions:
            for op in ("min", "max"):
                rows = eval_superlative(table, vc, op, cond, cond_value)
                if not rows:
                    continue
                cells = [table.rows[r][vc] for r in rows]
                if any(not c.text.strip() for c in cells):
                    continue
                word = superlative_word(table, vc, op)
                if cond is None:
                    core = f"what was the {word} {col.header}(s)?"
                else:
                    zh = table.columns[cond].header
                    core = f"what was the {word} {col.header}(s) where the {zh} was {cond_value}?"
                pl = f"In {table.table_title} of {table.page_title}, {core}"
                answers = _answers_from_cells(cells)
                qid = "tbl-" + _short_hash(
                    context_id, "sup", str(vc), op, str(cond), norm_cell(cond_value or "")
                )
                mentions = ()
                if cond is not None and cond_value is not None and cond_rows:
                    mentions = _mention_for_value(table, cond, cond_rows, cond_value)
                questions.append(
                    AtomicQuestion(
                        id=qid,
                        modality="table",
                        pl_text=pl,
                        core_text=core,
                        answers=answers,
                        anchors=Anchors(
                            columns=(vc,) if cond is None else (vc, cond),
                            cells=tuple((r, vc) for r in rows),
                            predicate={
                                "kind": "superlative",
                                "value_col": vc,
                                "op": op,
                                "condition": cond,
                                "condition_value": cond_value,
                            },
                        ),
                        answer_kind="entity" if answers.entity_titles is not None else "string",
                        mentions=mentions,
                    )
                )
    return questions
