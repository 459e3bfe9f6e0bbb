"""Dataset-level evaluation with Single/Multi/All breakdowns."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .metrics import list_em_f1


@dataclass(frozen=True)
class ExampleScore:
    qid: str
    em: float
    f1: float
    multimodal: bool
    predicted: bool


@dataclass(frozen=True)
class BucketScore:
    em: float
    f1: float
    count: int

    def to_dict(self) -> dict:
        return {"em": self.em, "f1": self.f1, "count": self.count}


@dataclass(frozen=True)
class EvalReport:
    per_example: tuple[ExampleScore, ...]
    single_modality: BucketScore
    multi_modality: BucketScore
    all: BucketScore
    missing_predictions: int = 0

    def to_dict(self) -> dict:
        return {
            "aggregates": {
                "single_modality": self.single_modality.to_dict(),
                "multi_modality": self.multi_modality.to_dict(),
                "all": self.all.to_dict(),
            },
            "missing_predictions": self.missing_predictions,
            "per_example": [
                {"qid": s.qid, "em": s.em, "f1": s.f1, "multimodal": s.multimodal}
                for s in self.per_example
            ],
        }


def _bucket(scores: list[ExampleScore]) -> BucketScore:
    if not scores:
        return BucketScore(em=0.0, f1=0.0, count=0)
    return BucketScore(
        em=sum(s.em for s in scores) / len(scores),
        f1=sum(s.f1 for s in scores) / len(scores),
        count=len(scores),
    )


def evaluate(examples, predictions: dict[str, list[str]] | list[dict]) -> EvalReport:
    """Score predictions ({qid: answers} or [{"qid", "answers"}]) over a dataset.

    Every prediction qid must exist in the dataset; examples without a
    prediction score (0, 0) and are counted.
    """
    if not isinstance(predictions, dict):
        seen: dict[str, list[str]] = {}
        for row in predictions:
            qid = row["qid"]
            if qid in seen:
                raise ValueError(f"duplicate qid in predictions: {qid}")
            seen[qid] = list(row["answers"])
        predictions = seen

    by_qid = {ex.qid: ex for ex in examples}
    unknown = [qid for qid in predictions if qid not in by_qid]
    if unknown:
        raise ValueError(f"predictions reference unknown qids: {unknown[:5]}")

    scores: list[ExampleScore] = []
    missing = 0
    for ex in examples:
        pred = predictions.get(ex.qid)
        if pred is None:
            missing += 1
            scores.append(
                ExampleScore(qid=ex.qid, em=0.0, f1=0.0, multimodal=ex.multimodal, predicted=False)
            )
            continue
        em, f1 = list_em_f1(list(ex.answers.values), pred)
        scores.append(
            ExampleScore(qid=ex.qid, em=em, f1=f1, multimodal=ex.multimodal, predicted=True)
        )

    return EvalReport(
        per_example=tuple(scores),
        single_modality=_bucket([s for s in scores if not s.multimodal]),
        multi_modality=_bucket([s for s in scores if s.multimodal]),
        all=_bucket(scores),
        missing_predictions=missing,
    )


def load_predictions(path: str | Path) -> list[dict]:
    rows = []
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                row = json.loads(line)
                rows.append({"qid": row["qid"], "answers": list(row["answers"])})
            except (json.JSONDecodeError, KeyError) as exc:
                raise ValueError(f"{path}:{lineno}: bad prediction line ({exc})") from exc
    return rows


def format_report(report: EvalReport) -> str:
    lines = [
        f"{'bucket':<16} {'EM':>7} {'F1':>7} {'count':>6}",
        "-" * 40,
    ]
    for name, bucket in (
        ("single-modality", report.single_modality),
        ("multi-modality", report.multi_modality),
        ("all", report.all),
    ):
        lines.append(f"{name:<16} {bucket.em:7.3f} {bucket.f1:7.3f} {bucket.count:6d}")
    if report.missing_predictions:
        lines.append(f"missing predictions: {report.missing_predictions}")
    return "\n".join(lines)
