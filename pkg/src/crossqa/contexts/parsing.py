"""Context file parsing and validation.

A context file is one JSON document with top-level keys `table`, `paragraphs`,
`images`, `entities`. Parsing resolves every cross-reference and raises
ContextSchemaError on structural problems and DanglingReferenceError when a
cell link or image entity points outside the declared entity set.
"""

from __future__ import annotations

import json
from pathlib import Path

from .model import Cell, Column, Context, ImageRef, Paragraph, Table, WikiEntity
from .columns import classify_column


class ContextError(ValueError):
    pass


class ContextSchemaError(ContextError):
    pass


class DanglingReferenceError(ContextError):
    pass


def _require(d: dict, key: str, where: str):
    if key not in d:
        raise ContextSchemaError(f"{where}: missing required field '{key}'")
    return d[key]


def parse_context(document: dict, context_id: str = "") -> Context:
    """Build a validated Context from a raw JSON document."""
    if not isinstance(document, dict):
        raise ContextSchemaError("context document must be a JSON object")

    raw_table = _require(document, "table", "context")
    raw_paragraphs = document.get("paragraphs", [])
    raw_images = document.get("images", [])
    raw_entities = document.get("entities", [])
    cid = document.get("context_id", context_id)

    entities = []
    seen_titles = set()
    for i, e in enumerate(raw_entities):
        title = _require(e, "title", f"entities[{i}]")
        if not title:
            raise ContextSchemaError(f"entities[{i}]: empty title")
        if title in seen_titles:
            raise ContextSchemaError(f"entities[{i}]: duplicate entity title '{title}'")
        seen_titles.add(title)
        entities.append(WikiEntity.from_dict(e))
    titles = {e.title for e in entities}

    images = []
    seen_image_ids = set()
    for i, im in enumerate(raw_images):
        iid = _require(im, "id", f"images[{i}]")
        if iid in seen_image_ids:
            raise ContextSchemaError(f"images[{i}]: duplicate image id '{iid}'")
        seen_image_ids.add(iid)
        ref = ImageRef.from_dict(im)
        if ref.source not in ("in_table", "entity_page"):
            raise ContextSchemaError(f"images[{i}]: unknown source '{ref.source}'")
        if ref.entity_title is not None and ref.entity_title not in titles:
            raise DanglingReferenceError(
                f"images[{i}]: entity_title '{ref.entity_title}' not in entities"
            )
        images.append(ref)
    images_by_id = {im.id: im for im in images}

    columns_raw = _require(raw_table, "columns", "table")
    rows_raw = _require(raw_table, "rows", "table")
    n_cols = len(columns_raw)
    if n_cols == 0:
        raise ContextSchemaError("table: must declare at least one column")

    rows = []
    in_table_anchors: set[str] = set()
    for r, row_raw in enumerate(rows_raw):
        if len(row_raw) != n_cols:
            raise ContextSchemaError(
                f"table row {r}: has {len(row_raw)} cells, expected {n_cols}"
            )
        cells = []
        for c, cell_raw in enumerate(row_raw):
            cell = Cell.from_dict(cell_raw)
            for link in cell.links:
                if link not in titles:
                    raise DanglingReferenceError(
                        f"table cell ({r},{c}): link '{link}' not in entities"
                    )
            if cell.image is not None:
                known = images_by_id.get(cell.image.id)
                if known is None:
                    raise DanglingReferenceError(
                        f"table cell ({r},{c}): image '{cell.image.id}' not in images"
                    )
                if known.source != "in_table":
                    raise ContextSchemaError(
                        f"table cell ({r},{c}): cell image '{cell.image.id}' must have source in_table"
                    )
                cell = Cell(text=cell.text, links=cell.links, image=known)
                in_table_anchors.add(known.id)
            cells.append(cell)
        rows.append(tuple(cells))

    for im in images:
        if im.source == "in_table" and im.id not in in_table_anchors:
            raise DanglingReferenceError(
                f"image '{im.id}' has source in_table but no cell anchors it"
            )

    columns = []
    for pos, col_raw in enumerate(columns_raw):
        header = _require(col_raw, "header", f"columns[{pos}]")
        declared = col_raw.get("semantic_type")
        inferred = classify_column([row[pos].text for row in rows]) if rows else "text"
        semantic = declared if declared else inferred
        if semantic not in ("date", "numeric", "index", "text"):
            raise ContextSchemaError(f"columns[{pos}]: unknown semantic_type '{semantic}'")
        columns.append(Column(header=header, semantic_type=semantic, position=pos))

    table = Table(
        page_title=_require(raw_table, "page_title", "table"),
        table_title=_require(raw_table, "table_title", "table"),
        columns=tuple(columns),
        rows=tuple(rows),
    )

    paragraphs = []
    seen_pids = set()
    for i, p in enumerate(raw_paragraphs):
        pid = _require(p, "id", f"paragraphs[{i}]")
        if pid in seen_pids:
            raise ContextSchemaError(f"paragraphs[{i}]: duplicate paragraph id '{pid}'")
        seen_pids.add(pid)
        text = _require(p, "text", f"paragraphs[{i}]")
        if not text:
            raise ContextSchemaError(f"paragraphs[{i}]: empty text")
        paragraphs.append(Paragraph.from_dict(p))

    return Context(
        context_id=cid,
        table=table,
        paragraphs=tuple(paragraphs),
        images=tuple(images),
        entities=tuple(entities),
    )


def load_context_file(path: str | Path) -> Context:
    path = Path(path)
    with open(path, encoding="utf-8") as f:
        document = json.load(f)
    default_id = path.name.removesuffix(".ctx.json").removesuffix(".json")
    return parse_context(document, context_id=default_id)
