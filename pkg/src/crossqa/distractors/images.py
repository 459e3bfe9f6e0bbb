"""Image distractor sampling for single-image questions."""

from __future__ import annotations

import random

from ..contexts.model import Context, ImageRef
from ..linking.entity_images import map_entity_images

MAX_IMAGE_DISTRACTORS = 15


def table_entity_images(context: Context, blocklist: set[str] | frozenset[str] = frozenset()) -> list[ImageRef]:
    """Images of entities linked from the table, in entity first-link order."""
    mapping = map_entity_images(context.entities, blocklist)
    out = []
    seen = set()
    for title in context.table.linked_entity_titles():
        img = mapping.get(title)
        if img is not None and img.id not in seen:
            seen.add(img.id)
            out.append(img)
    return out


def select_image_distractors(
    context: Context,
    gold_image_ids: set[str],
    seed: int,
    qid: str,
    blocklist: set[str] | frozenset[str] = frozenset(),
    cap: int = MAX_IMAGE_DISTRACTORS,
) -> list[ImageRef]:
    """Uniform seeded sample of distinct table-entity images, gold excluded,
    at most `cap` of them. Fewer candidates than the cap is fine."""
    candidates = [
        img for img in table_entity_images(context, blocklist) if img.id not in gold_image_ids
    ]
    candidates.sort(key=lambda im: im.id)
    rng = random.Random(f"{seed}|{qid}|images")
    if len(candidates) <= cap:
        return candidates
    picked = sorted(rng.sample(range(len(candidates)), cap))
    return [candidates[i] for i in picked]
