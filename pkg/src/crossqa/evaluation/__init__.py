from .normalize import normalize_answer, normalized_tokens
from .metrics import list_em_f1, pair_f1
from .report import (
    BucketScore,
    EvalReport,
    ExampleScore,
    evaluate,
    format_report,
    load_predictions,
)
from .audits import AuditFlag, detect_redundant_evidence, detect_weak_distractors

__all__ = [
    "AuditFlag",
    "BucketScore",
    "EvalReport",
    "ExampleScore",
    "detect_redundant_evidence",
    "detect_weak_distractors",
    "evaluate",
    "format_report",
    "list_em_f1",
    "load_predictions",
    "normalize_answer",
    "normalized_tokens",
    "pair_f1",
]
