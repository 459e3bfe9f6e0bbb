"""Locating the column that describes a table's images, and deciding whether a
column can host questions over its image list."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..contexts.model import Table, WikiEntity


@dataclass(frozen=True)
class ImageColumnConfig:
    """Weights for the linear image-description-column scorer.

    Signals: closeness to the left edge, cell uniqueness, one-entity cells,
    very short cells (negative), and a header keyword hit.
    """

    w_left_position: float = 0.2
    w_uniqueness: float = 0.25
    w_single_entity: float = 0.35
    w_short_text: float = -0.3
    w_header_keyword: float = 0.2
    threshold: float = 0.5
    header_keywords: tuple[str, ...] = ("name", "title", "description")


DEFAULT_IMAGE_COLUMN_CONFIG = ImageColumnConfig()


def detect_image_column(
    table: Table,
    images_by_column: dict[int, int] | None = None,
    config: ImageColumnConfig = DEFAULT_IMAGE_COLUMN_CONFIG,
) -> dict[int, float]:
    """Score each column as a candidate image-description column.

    Columns that themselves hold in-table images (per images_by_column counts)
    are excluded from candidacy and score 0. Use `select_image_column` to get
    the argmax above the configured threshold.
    """
    if table.n_columns == 0:
        raise ValueError("table has no columns")
    images_by_column = images_by_column or {}
    n_rows = max(table.n_rows, 1)
    span = max(table.n_columns - 1, 1)

    scores: dict[int, float] = {}
    for col in table.columns:
        if images_by_column.get(col.position, 0) > 0:
            scores[col.position] = 0.0
            continue
        cells = table.column_cells(col.position)
        texts = [c.text.strip() for c in cells]
        non_empty = [t for t in texts if t]

        left = 1.0 - col.position / span
        uniqueness = len(set(non_empty)) / n_rows
        single_entity = sum(1 for c in cells if len(c.links) == 1) / n_rows
        short_text = sum(1 for t in texts if len(t) <= 2) / n_rows
        header = col.header.lower()
        keyword = 1.0 if any(k in header for k in config.header_keywords) else 0.0

        score = (
            config.w_left_position * left
            + config.w_uniqueness * uniqueness
            + config.w_single_entity * single_entity
            + config.w_short_text * short_text
            + config.w_header_keyword * keyword
        )
        scores[col.position] = score
    return scores


def select_image_column(
    table: Table,
    images_by_column: dict[int, int] | None = None,
    config: ImageColumnConfig = DEFAULT_IMAGE_COLUMN_CONFIG,
) -> int | None:
    """Position of the best-scoring column above the threshold, or None."""
    scores = detect_image_column(table, images_by_column, config)
    best = max(scores, key=lambda pos: (scores[pos], -pos))
    return best if scores[best] > config.threshold else None


def eligible_image_list_column(
    cells: list, entities_by_title: dict[str, WikiEntity]
) -> bool:
    """Whether a column of cells can anchor image-list questions.

    Requires at least 4 distinct linked entities, at most 3 cells sharing any
    duplicated image, and at most 2 linked entities without an image.
    """
    titles: list[str] = []
    seen = set()
    for cell in cells:
        for t in cell.links:
            if t not in seen:
                seen.add(t)
                titles.append(t)
    if len(titles) < 4:
        return False

    missing = 0
    for t in titles:
        ent = entities_by_title.get(t)
        if ent is None or ent.image is None:
            missing += 1
    if missing > 2:
        return False

    # Cells sharing one duplicated image: count per image id across cells.
    cell_counts: dict[str, int] = {}
    for cell in cells:
        cell_image_ids = set()
        if cell.image is not None:
            cell_image_ids.add(cell.image.id)
        for t in cell.links:
            ent = entities_by_title.get(t)
            if ent is not None and ent.image is not None:
                cell_image_ids.add(ent.image.id)
        for iid in cell_image_ids:
            cell_counts[iid] = cell_counts.get(iid, 0) + 1
    if any(n > 3 for n in cell_counts.values()):
        return False
    return True
