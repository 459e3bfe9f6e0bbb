"""The dataset record: one question with its program, answers, and full context."""

from __future__ import annotations

from dataclasses import dataclass

from ..atomic.model import AnswerList
from ..compose.program import Program
from ..distractors.paragraphs import AssembledContext

SPLITS = ("train", "dev", "test")


@dataclass(frozen=True)
class Example:
    qid: str
    pl_question: str
    program: Program
    answers: AnswerList
    context: AssembledContext
    split: str
    nl_question: str | None = None
    intermediate_answers: AnswerList | None = None

    @property
    def question_type(self) -> str:
        return self.program.question_type

    @property
    def multimodal(self) -> bool:
        return len(self.program.modalities_used()) >= 2

    @property
    def compositional(self) -> bool:
        return not self.program.is_atomic

    @property
    def question_text(self) -> str:
        return self.nl_question if self.nl_question else self.pl_question

    def to_dict(self) -> dict:
        d: dict = {
            "qid": self.qid,
            "pl_question": self.pl_question,
            "nl_question": self.nl_question,
            "question_type": self.question_type,
            "program": self.program.to_dict(),
            "answers": self.answers.to_dict(),
            "intermediate_answers": (
                self.intermediate_answers.to_dict() if self.intermediate_answers else None
            ),
            "context": self.context.to_dict(),
            "split": self.split,
            "multimodal": self.multimodal,
            "compositional": self.compositional,
        }
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Example":
        inter = d.get("intermediate_answers")
        example = cls(
            qid=d["qid"],
            pl_question=d["pl_question"],
            nl_question=d.get("nl_question"),
            program=Program.from_dict(d["program"]),
            answers=AnswerList.from_dict(d["answers"]),
            intermediate_answers=AnswerList.from_dict(inter) if inter else None,
            context=AssembledContext.from_dict(d["context"]),
            split=d.get("split", "train"),
        )
        for flag in ("multimodal", "compositional"):
            if flag in d and d[flag] != getattr(example, flag):
                raise ValueError(
                    f"example {example.qid}: stored {flag}={d[flag]} disagrees with its program"
                )
        return example

    def with_split(self, split: str) -> "Example":
        if split not in SPLITS:
            raise ValueError(f"unknown split '{split}'")
        return Example(
            qid=self.qid,
            pl_question=self.pl_question,
            nl_question=self.nl_question,
            program=self.program,
            answers=self.answers,
            intermediate_answers=self.intermediate_answers,
            context=self.context,
            split=split,
        )

    def with_nl_question(self, nl_question: str) -> "Example":
        return Example(
            qid=self.qid,
            pl_question=self.pl_question,
            nl_question=nl_question,
            program=self.program,
            answers=self.answers,
            intermediate_answers=self.intermediate_answers,
            context=self.context,
            split=self.split,
        )
