"""Answer normalization shared by metrics, leak checks, and guards."""

from __future__ import annotations

import re
import string

_ARTICLES_RE = re.compile(r"\b(a|an|the)\b")
_PUNCT_TABLE = str.maketrans("", "", string.punctuation)


def normalize_answer(text: str) -> str:
    """Lowercase, drop punctuation, drop the articles a/an/the, collapse whitespace.

    Note punctuation is removed before token comparison, so "1,957" and "1957"
    normalize identically.
    """
    text = text.lower()
    text = text.translate(_PUNCT_TABLE)
    text = _ARTICLES_RE.sub(" ", text)
    return " ".join(text.split())


def normalized_tokens(text: str) -> list[str]:
    return normalize_answer(text).split()
