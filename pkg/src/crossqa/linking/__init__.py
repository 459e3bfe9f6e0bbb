from .tokens import tokenize, tokenize_with_spans
from .image_column import (
    DEFAULT_IMAGE_COLUMN_CONFIG,
    ImageColumnConfig,
    detect_image_column,
    eligible_image_list_column,
    select_image_column,
)
from .entity_images import load_blocklist, map_entity_images
from .question_links import (
    LinkResult,
    RCTriple,
    build_entity_index,
    link_text_question,
    load_rc_triples,
)

__all__ = [
    "DEFAULT_IMAGE_COLUMN_CONFIG",
    "ImageColumnConfig",
    "LinkResult",
    "RCTriple",
    "build_entity_index",
    "detect_image_column",
    "eligible_image_list_column",
    "link_text_question",
    "load_blocklist",
    "load_rc_triples",
    "map_entity_images",
    "select_image_column",
    "tokenize",
    "tokenize_with_spans",
]
