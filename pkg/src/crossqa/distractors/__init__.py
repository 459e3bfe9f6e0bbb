from .scorers import ExternalScorer, IdfScorer, RetrievalScorer, lexical_scorer, score_batch
from .paragraphs import (
    CONTEXT_PARAGRAPHS,
    AssembledContext,
    InsufficientPoolError,
    PartitionLedger,
    RoleImage,
    leaks_answer,
    select_text_distractors,
)
from .images import MAX_IMAGE_DISTRACTORS, select_image_distractors, table_entity_images

__all__ = [
    "CONTEXT_PARAGRAPHS",
    "AssembledContext",
    "ExternalScorer",
    "IdfScorer",
    "InsufficientPoolError",
    "MAX_IMAGE_DISTRACTORS",
    "PartitionLedger",
    "RetrievalScorer",
    "RoleImage",
    "leaks_answer",
    "lexical_scorer",
    "score_batch",
    "select_image_distractors",
    "select_text_distractors",
    "table_entity_images",
]
