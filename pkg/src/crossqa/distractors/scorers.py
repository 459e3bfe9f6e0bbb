"""Retrieval scoring for distractor selection.

The default scorer is a lexical cosine; a remote scoring endpoint can be
plugged in and falls back to the lexical scorer on failure.
"""

from __future__ import annotations

import json
import logging
import math
import urllib.request
from collections import Counter
from typing import Protocol

from ..linking.tokens import tokenize

logger = logging.getLogger(__name__)


class RetrievalScorer(Protocol):
    def __call__(self, question: str, paragraph: str) -> float: ...


def lexical_scorer(question: str, paragraph: str) -> float:
    """Cosine similarity between token-count vectors of the two texts.

    Identical texts score 1.0, token-disjoint texts 0.0.
    """
    q = Counter(tokenize(question))
    p = Counter(tokenize(paragraph))
    if not q or not p:
        return 0.0
    dot = sum(q[t] * p[t] for t in q.keys() & p.keys())
    if dot == 0:
        return 0.0
    nq = math.sqrt(sum(v * v for v in q.values()))
    np_ = math.sqrt(sum(v * v for v in p.values()))
    return dot / (nq * np_)


class IdfScorer:
    """Lexical cosine with inverse-document-frequency weights from a paragraph pool."""

    def __init__(self, documents: list[str]):
        self.n_docs = max(len(documents), 1)
        df: Counter[str] = Counter()
        for doc in documents:
            df.update(set(tokenize(doc)))
        self.idf = {t: math.log(1.0 + self.n_docs / (1.0 + n)) for t, n in df.items()}
        self.default_idf = math.log(1.0 + self.n_docs)

    def _vector(self, text: str) -> dict[str, float]:
        counts = Counter(tokenize(text))
        return {t: n * self.idf.get(t, self.default_idf) for t, n in counts.items()}

    def __call__(self, question: str, paragraph: str) -> float:
        q = self._vector(question)
        p = self._vector(paragraph)
        if not q or not p:
            return 0.0
        dot = sum(q[t] * p[t] for t in q.keys() & p.keys())
        if dot == 0:
            return 0.0
        nq = math.sqrt(sum(v * v for v in q.values()))
        np_ = math.sqrt(sum(v * v for v in p.values()))
        return dot / (nq * np_)


class ExternalScorer:
    """Scores against a local HTTP JSON endpoint.

    Request: {"question": str, "paragraphs": [str]} -> {"scores": [float]}.
    Timeouts and transport errors fall back to the lexical scorer with a warning.
    """

    def __init__(self, endpoint: str, timeout: float = 5.0, fallback: RetrievalScorer = lexical_scorer):
        self.endpoint = endpoint
        self.timeout = timeout
        self.fallback = fallback

    def score_batch(self, question: str, paragraphs: list[str]) -> list[float]:
        payload = json.dumps({"question": question, "paragraphs": paragraphs}).encode("utf-8")
        request = urllib.request.Request(
            self.endpoint, data=payload, headers={"Content-Type": "application/json"}
        )
        try:
            with urllib.request.urlopen(request, timeout=self.timeout) as response:
                body = json.loads(response.read().decode("utf-8"))
            scores = [float(s) for s in body["scores"]]
            if len(scores) != len(paragraphs):
                raise ValueError("endpoint returned wrong number of scores")
            return scores
        except Exception as exc:  # noqa: BLE001 - any transport failure falls back
            logger.warning("external scorer failed (%s); falling back to lexical scorer", exc)
            return [self.fallback(question, p) for p in paragraphs]

    def __call__(self, question: str, paragraph: str) -> float:
        return self.score_batch(question, [paragraph])[0]


def score_batch(scorer: RetrievalScorer, question: str, paragraphs: list[str]) -> list[float]:
    batch = getattr(scorer, "score_batch", None)
    if callable(batch):
        return batch(question, paragraphs)
    return [scorer(question, p) for p in paragraphs]
