"""List-aware EM/F1.

A prediction list is scored against a gold list by building the pairwise
token-F1 matrix, padding the shorter list with empty strings, and taking a
maximum-weight one-to-one alignment; F1 is the aligned sum over the longer
length. EM is multiset equality of the normalized strings. Both are therefore
invariant to the order of either list.
"""

from __future__ import annotations

from collections import Counter

import numpy as np
from scipy.optimize import linear_sum_assignment

from .normalize import normalize_answer, normalized_tokens


def pair_f1(gold: str, pred: str) -> float:
    """Token-multiset overlap F1 between two normalized strings."""
    gold_tokens = normalized_tokens(gold)
    pred_tokens = normalized_tokens(pred)
    if not gold_tokens and not pred_tokens:
        return 1.0
    if not gold_tokens or not pred_tokens:
        return 0.0
    common = Counter(gold_tokens) & Counter(pred_tokens)
    n_same = sum(common.values())
    if n_same == 0:
        return 0.0
    precision = n_same / len(pred_tokens)
    recall = n_same / len(gold_tokens)
    return 2 * precision * recall / (precision + recall)


def list_em_f1(gold: list[str] | tuple[str, ...], pred: list[str] | tuple[str, ...]) -> tuple[float, float]:
    """(em, f1) for a gold answer list against a predicted list."""
    gold = list(gold)
    pred = list(pred)
    if not gold:
        raise ValueError("gold answer list must not be empty")

    em = 1.0 if Counter(map(normalize_answer, gold)) == Counter(map(normalize_answer, pred)) else 0.0

    n = max(len(gold), len(pred))
    gold_padded = gold + [""] * (n - len(gold))
    pred_padded = pred + [""] * (n - len(pred))
    matrix = np.zeros((n, n))
    for i, g in enumerate(gold_padded):
        for j, p in enumerate(pred_padded):
            matrix[i, j] = pair_f1(g, p)
    rows, cols = linear_sum_assignment(matrix, maximize=True)
    f1 = float(matrix[rows, cols].sum()) / n
    return em, f1
