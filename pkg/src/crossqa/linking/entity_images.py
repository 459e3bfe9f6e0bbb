"""Entity-to-image mapping with a blocklist of non-representative images."""

from __future__ import annotations

from pathlib import Path

from ..contexts.model import ImageRef, WikiEntity


def map_entity_images(
    entities: list[WikiEntity] | tuple[WikiEntity, ...],
    blocklist: set[str] | frozenset[str] = frozenset(),
) -> dict[str, ImageRef]:
    """Map each entity title to its image, skipping blocklisted or missing images.

    An in-table image can describe only one entity: if two entities claim the
    same in_table image, only the first (in input order) keeps the mapping.
    """
    mapping: dict[str, ImageRef] = {}
    claimed_in_table: set[str] = set()
    for ent in entities:
        img = ent.image
        if img is None or img.id in blocklist:
            continue
        if img.source == "in_table":
            if img.id in claimed_in_table:
                continue
            claimed_in_table.add(img.id)
        mapping[ent.title] = img
    return mapping


def load_blocklist(path: str | Path) -> set[str]:
    """Newline-delimited image ids; blank lines and '#' comments ignored."""
    out: set[str] = set()
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if line and not line.startswith("#"):
                out.add(line)
    return out
