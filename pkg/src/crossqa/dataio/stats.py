"""Corpus statistics over a dataset."""

from __future__ import annotations

from dataclasses import dataclass

from ..linking.tokens import tokenize
from .examples import Example

# Published reference values for the original 29,918-question corpus; shown as
# documentation next to computed stats, never asserted against generated data.
REFERENCE_STATS = {
    "n_questions": 29918,
    "pct_multimodal_train": 34.6,
    "pct_multimodal_eval": 40.1,
    "pct_compositional_train": 58.8,
    "pct_compositional_eval": 62.3,
    "avg_question_length_words": 18.2,
    "avg_answers_per_question": 1.16,
    "pct_list_answers": 7.4,
    "pct_list_intermediate_answers": 18.9,
    "avg_answer_length_words": 2.1,
    "distinct_words_in_questions": 49649,
    "distinct_words_in_answers": 20820,
    "distinct_tables": 11022,
    "split_sizes": {"train": 23817, "dev": 2441, "test": 3660},
}


@dataclass(frozen=True)
class CorpusStats:
    n_questions: int
    pct_multimodal_train: float
    pct_multimodal_eval: float
    pct_compositional_train: float
    pct_compositional_eval: float
    avg_question_length_words: float
    avg_answers_per_question: float
    pct_list_answers: float
    pct_list_intermediate_answers: float
    avg_answer_length_words: float
    distinct_words_in_questions: int
    distinct_words_in_answers: int
    distinct_tables: int

    def __post_init__(self):
        for name in (
            "pct_multimodal_train",
            "pct_multimodal_eval",
            "pct_compositional_train",
            "pct_compositional_eval",
            "pct_list_answers",
            "pct_list_intermediate_answers",
        ):
            value = getattr(self, name)
            if not 0.0 <= value <= 100.0:
                raise ValueError(f"{name} must be a percentage, got {value}")

    def to_dict(self) -> dict:
        return {
            "n_questions": self.n_questions,
            "pct_multimodal_train": self.pct_multimodal_train,
            "pct_multimodal_eval": self.pct_multimodal_eval,
            "pct_compositional_train": self.pct_compositional_train,
            "pct_compositional_eval": self.pct_compositional_eval,
            "avg_question_length_words": self.avg_question_length_words,
            "avg_answers_per_question": self.avg_answers_per_question,
            "pct_list_answers": self.pct_list_answers,
            "pct_list_intermediate_answers": self.pct_list_intermediate_answers,
            "avg_answer_length_words": self.avg_answer_length_words,
            "distinct_words_in_questions": self.distinct_words_in_questions,
            "distinct_words_in_answers": self.distinct_words_in_answers,
            "distinct_tables": self.distinct_tables,
        }


def _pct(part: int, whole: int) -> float:
    return 100.0 * part / whole if whole else 0.0


def compute_stats(examples: list[Example]) -> CorpusStats:
    """Every reported statistic over the given examples.

    Question length and vocabulary use the natural-language question when a
    paraphrase exists, else the machine-generated one; word counting uses the
    shared tokenizer.
    """
    if not examples:
        raise ValueError("cannot compute stats over an empty dataset")

    train = [ex for ex in examples if ex.split == "train"]
    evals = [ex for ex in examples if ex.split in ("dev", "test")]

    question_words = [tokenize(ex.question_text) for ex in examples]
    all_answers = [a for ex in examples for a in ex.answers.values]
    answer_words = [tokenize(a) for a in all_answers]

    with_intermediates = [ex for ex in examples if ex.intermediate_answers is not None]
    list_intermediates = [ex for ex in with_intermediates if len(ex.intermediate_answers) > 1]

    distinct_tables = {ex.context.context_id for ex in examples}

    return CorpusStats(
        n_questions=len({ex.qid for ex in examples}),
        pct_multimodal_train=_pct(sum(ex.multimodal for ex in train), len(train)),
        pct_multimodal_eval=_pct(sum(ex.multimodal for ex in evals), len(evals)),
        pct_compositional_train=_pct(sum(ex.compositional for ex in train), len(train)),
        pct_compositional_eval=_pct(sum(ex.compositional for ex in evals), len(evals)),
        avg_question_length_words=sum(map(len, question_words)) / len(examples),
        avg_answers_per_question=len(all_answers) / len(examples),
        pct_list_answers=_pct(sum(1 for ex in examples if len(ex.answers) > 1), len(examples)),
        pct_list_intermediate_answers=_pct(len(list_intermediates), len(with_intermediates)),
        avg_answer_length_words=sum(map(len, answer_words)) / len(all_answers),
        distinct_words_in_questions=len({w for ws in question_words for w in ws}),
        distinct_words_in_answers=len({w for ws in answer_words for w in ws}),
        distinct_tables=len(distinct_tables),
    )


def format_stats(stats: CorpusStats, reference: bool = False) -> str:
    rows = [
        ("# distinct questions", stats.n_questions, REFERENCE_STATS["n_questions"]),
        ("train multimodal %", round(stats.pct_multimodal_train, 1), REFERENCE_STATS["pct_multimodal_train"]),
        ("dev+test multimodal %", round(stats.pct_multimodal_eval, 1), REFERENCE_STATS["pct_multimodal_eval"]),
        ("train compositional %", round(stats.pct_compositional_train, 1), REFERENCE_STATS["pct_compositional_train"]),
        ("dev+test compositional %", round(stats.pct_compositional_eval, 1), REFERENCE_STATS["pct_compositional_eval"]),
        ("avg question length (words)", round(stats.avg_question_length_words, 2), REFERENCE_STATS["avg_question_length_words"]),
        ("avg # answers per question", round(stats.avg_answers_per_question, 2), REFERENCE_STATS["avg_answers_per_question"]),
        ("list answers %", round(stats.pct_list_answers, 1), REFERENCE_STATS["pct_list_answers"]),
        ("list intermediate answers %", round(stats.pct_list_intermediate_answers, 1), REFERENCE_STATS["pct_list_intermediate_answers"]),
        ("avg answer length (words)", round(stats.avg_answer_length_words, 2), REFERENCE_STATS["avg_answer_length_words"]),
        ("# distinct words in questions", stats.distinct_words_in_questions, REFERENCE_STATS["distinct_words_in_questions"]),
        ("# distinct words in answers", stats.distinct_words_in_answers, REFERENCE_STATS["distinct_words_in_answers"]),
        ("# distinct tables", stats.distinct_tables, REFERENCE_STATS["distinct_tables"]),
    ]
    header = f"{'measurement':<32} {'value':>12}"
    if reference:
        header += f" {'reference':>12}"
    lines = [header, "-" * len(header)]
    for name, value, ref in rows:
        line = f"{name:<32} {value:>12}"
        if reference:
            line += f" {ref:>12}"
        lines.append(line)
    if reference:
        lines.append("(reference column: published corpus, documentation only)")
    return "\n".join(lines)
