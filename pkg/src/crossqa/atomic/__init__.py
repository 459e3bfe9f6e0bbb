from .model import ANSWER_KINDS, MODALITIES, Anchors, AnswerList, AtomicQuestion
from .table_questions import (
    DEFAULT_TABLE_GEN_CONFIG,
    TableGenConfig,
    eval_lookup,
    eval_superlative,
    gen_table_lookup_questions,
    gen_table_superlative_questions,
    norm_cell,
    resolve_cell_entity,
    select_rows,
    superlative_word,
)
from .banks import (
    IngestError,
    SkippedQuestion,
    ingest_image_questions,
    ingest_text_questions,
    load_image_bank,
    load_vocabulary,
)

__all__ = [
    "ANSWER_KINDS",
    "Anchors",
    "AnswerList",
    "AtomicQuestion",
    "DEFAULT_TABLE_GEN_CONFIG",
    "IngestError",
    "MODALITIES",
    "SkippedQuestion",
    "TableGenConfig",
    "eval_lookup",
    "eval_superlative",
    "gen_table_lookup_questions",
    "gen_table_superlative_questions",
    "ingest_image_questions",
    "ingest_text_questions",
    "load_image_bank",
    "load_vocabulary",
    "norm_cell",
    "resolve_cell_entity",
    "select_rows",
    "superlative_word",
]
