from .examples import SPLITS, Example
from .datasets import (
    DatasetError,
    config_hash,
    read_dataset,
    read_examples_file,
    write_dataset,
    write_examples_file,
)
from .splits import (
    PAPER_SPLIT_SIZES,
    SplitResult,
    audit_split_disjointness,
    ratio_preset,
    split_dataset,
)
from .stats import REFERENCE_STATS, CorpusStats, compute_stats, format_stats

__all__ = [
    "CorpusStats",
    "DatasetError",
    "Example",
    "PAPER_SPLIT_SIZES",
    "REFERENCE_STATS",
    "SPLITS",
    "SplitResult",
    "audit_split_disjointness",
    "compute_stats",
    "config_hash",
    "format_stats",
    "ratio_preset",
    "read_dataset",
    "read_examples_file",
    "split_dataset",
    "write_dataset",
    "write_examples_file",
]
