"""Single-modality question records used as composition leaves."""

from __future__ import annotations

from dataclasses import dataclass, field

MODALITIES = ("table", "text", "image", "image_list")
ANSWER_KINDS = ("entity", "string")


@dataclass(frozen=True)
class AnswerList:
    """Ordered answer strings, optionally paired with the entity titles they name."""

    values: tuple[str, ...]
    entity_titles: tuple[str, ...] | None = None

    def __post_init__(self):
        if not self.values:
            raise ValueError("answer list must not be empty")
        if self.entity_titles is not None and len(self.entity_titles) != len(self.values):
            raise ValueError("entity_titles must parallel values")

    def __len__(self) -> int:
        return len(self.values)

    @property
    def titles(self) -> tuple[str, ...]:
        """Entity titles when present, else the raw values."""
        return self.entity_titles if self.entity_titles is not None else self.values

    def to_dict(self) -> dict:
        d: dict = {"values": list(self.values)}
        if self.entity_titles is not None:
            d["entity_titles"] = list(self.entity_titles)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "AnswerList":
        et = d.get("entity_titles")
        return cls(values=tuple(d["values"]), entity_titles=tuple(et) if et is not None else None)


@dataclass(frozen=True)
class Anchors:
    """References from a question into its context."""

    columns: tuple[int, ...] = ()
    cells: tuple[tuple[int, int], ...] = ()
    paragraphs: tuple[str, ...] = ()
    images: tuple[str, ...] = ()
    predicate: dict | None = None  # table questions: re-executable predicate

    def to_dict(self) -> dict:
        d: dict = {}
        if self.columns:
            d["columns"] = list(self.columns)
        if self.cells:
            d["cells"] = [list(c) for c in self.cells]
        if self.paragraphs:
            d["paragraphs"] = list(self.paragraphs)
        if self.images:
            d["images"] = list(self.images)
        if self.predicate is not None:
            d["predicate"] = self.predicate
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Anchors":
        return cls(
            columns=tuple(d.get("columns", ())),
            cells=tuple(tuple(c) for c in d.get("cells", ())),
            paragraphs=tuple(d.get("paragraphs", ())),
            images=tuple(d.get("images", ())),
            predicate=d.get("predicate"),
        )


@dataclass(frozen=True)
class AtomicQuestion:
    id: str
    modality: str
    pl_text: str          # standalone form, includes its own table/page lead-in
    core_text: str        # prefix-free form used inside compositions
    answers: AnswerList
    anchors: Anchors
    answer_kind: str
    mentions: tuple[str, ...] = ()  # entity titles this question's text mentions

    def __post_init__(self):
        if self.modality not in MODALITIES:
            raise ValueError(f"unknown modality '{self.modality}'")
        if self.answer_kind not in ANSWER_KINDS:
            raise ValueError(f"unknown answer_kind '{self.answer_kind}'")
        if self.modality == "image" and len(self.anchors.images) != 1:
            raise ValueError("single-image questions need exactly one image anchor")

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "modality": self.modality,
            "pl_text": self.pl_text,
            "core_text": self.core_text,
            "answers": self.answers.to_dict(),
            "anchors": self.anchors.to_dict(),
            "answer_kind": self.answer_kind,
            "mentions": list(self.mentions),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AtomicQuestion":
        return cls(
            id=d["id"],
            modality=d["modality"],
            pl_text=d["pl_text"],
            core_text=d.get("core_text", d["pl_text"]),
            answers=AnswerList.from_dict(d["answers"]),
            anchors=Anchors.from_dict(d.get("anchors", {})),
            answer_kind=d.get("answer_kind", "string"),
            mentions=tuple(d.get("mentions", ())),
        )
