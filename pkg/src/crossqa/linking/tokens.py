"""Shared word tokenizer. Every component that counts or matches words uses this."""

from __future__ import annotations

import re

_WORD_RE = re.compile(r"\w+", re.UNICODE)


def tokenize(text: str) -> list[str]:
    """Lowercased word tokens (unicode word characters, punctuation dropped)."""
    return [m.group(0).lower() for m in _WORD_RE.finditer(text)]


def tokenize_with_spans(text: str) -> list[tuple[str, int, int]]:
    """Lowercased tokens with their (start, end) character offsets."""
    return [(m.group(0).lower(), m.start(), m.end()) for m in _WORD_RE.finditer(text)]
