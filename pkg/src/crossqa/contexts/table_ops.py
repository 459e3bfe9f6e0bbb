"""Whole-table operations: corpus filtering and row linearization."""

from __future__ import annotations

from .model import Table, WikiEntity


def filter_table(
    table: Table,
    entities: tuple[WikiEntity, ...] = (),
    min_rows: int = 10,
    max_rows: int = 25,
    min_images: int = 3,
) -> bool:
    """Accept a table when its row count is in [min_rows, max_rows] and at least
    min_images distinct images are reachable from it (in-table images plus page
    images of entities linked from its cells)."""
    if min_rows > max_rows:
        raise ValueError("min_rows must be <= max_rows")
    if not min_rows <= table.n_rows <= max_rows:
        return False

    image_ids = {im.id for im in table.in_table_images()}
    by_title = {e.title: e for e in entities}
    for title in table.linked_entity_titles():
        ent = by_title.get(title)
        if ent is not None and ent.image is not None:
            image_ids.add(ent.image.id)
    return len(image_ids) >= min_images


def linearize_table(table: Table) -> str:
    """Flatten a table to "Row i: header is cell; ..." text, one sentence per row.

    Headers are lowercased, cell text is kept verbatim, rows are joined by ". "
    and the output ends with a period. An empty table produces an empty string.
    """
    if table.n_rows == 0:
        return ""
    row_texts = []
    for i, row in enumerate(table.rows, start=1):
        parts = [
            f"{col.header.lower()} is {cell.text}"
            for col, cell in zip(table.columns, row)
        ]
        row_texts.append(f"Row {i}: " + "; ".join(parts))
    return ". ".join(row_texts) + "."
