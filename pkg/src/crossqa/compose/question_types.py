"""The 16-template registry: labels, slot modalities, hop plans.

The default registry covers the four atomic types, six Compose cross pairs
(outer must carry a single entity mention, inner must answer with entities,
one side must be table or text), three Intersect pairs over entity-list
producers, and three Compare pairs over single-entity table-anchored
producers. A JSON registry file with the same fields can override it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .program import MODALITY_LABELS


@dataclass(frozen=True)
class QuestionType:
    label: str
    operation: str                       # atomic | compose | intersect | compare
    slots: tuple[str, ...]               # modalities in label order
    final_modality: str
    hop_plan: tuple[tuple[str, str], ...]  # (modality, intermediate|final)
    combine: str                         # none | intersect | compare

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "operation": self.operation,
            "slots": list(self.slots),
            "final_modality": self.final_modality,
            "hop_plan": [list(h) for h in self.hop_plan],
            "combine": self.combine,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "QuestionType":
        return cls(
            label=d["label"],
            operation=d["operation"],
            slots=tuple(d["slots"]),
            final_modality=d["final_modality"],
            hop_plan=tuple(tuple(h) for h in d["hop_plan"]),
            combine=d.get("combine", "none"),
        )


COMPOSE_PAIRS = (
    ("table", "text"),
    ("table", "image_list"),
    ("text", "table"),
    ("text", "image_list"),
    ("image", "table"),
    ("image", "text"),
)
INTERSECT_PAIRS = (
    ("table", "text"),
    ("table", "image_list"),
    ("text", "image_list"),
)
COMPARE_PAIRS = (
    ("table", "text"),
    ("table", "image_list"),
    ("text", "image_list"),
)


def default_registry() -> dict[str, QuestionType]:
    registry: dict[str, QuestionType] = {}

    for modality in ("table", "text", "image", "image_list"):
        label = MODALITY_LABELS[modality]
        registry[label] = QuestionType(
            label=label,
            operation="atomic",
            slots=(modality,),
            final_modality=modality,
            hop_plan=((modality, "final"),),
            combine="none",
        )

    for outer, inner in COMPOSE_PAIRS:
        label = f"Compose({MODALITY_LABELS[outer]},{MODALITY_LABELS[inner]})"
        registry[label] = QuestionType(
            label=label,
            operation="compose",
            slots=(outer, inner),
            final_modality=outer,
            hop_plan=((inner, "intermediate"), (outer, "final")),
            combine="none",
        )

    for left, right in INTERSECT_PAIRS:
        label = f"Intersect({MODALITY_LABELS[left]},{MODALITY_LABELS[right]})"
        registry[label] = QuestionType(
            label=label,
            operation="intersect",
            slots=(left, right),
            final_modality="table",
            hop_plan=((left, "intermediate"), (right, "intermediate")),
            combine="intersect",
        )

    for left, right in COMPARE_PAIRS:
        label = f"Compare({MODALITY_LABELS[left]},{MODALITY_LABELS[right]})"
        registry[label] = QuestionType(
            label=label,
            operation="compare",
            slots=(left, right),
            final_modality="table",
            hop_plan=((left, "intermediate"), (right, "intermediate")),
            combine="compare",
        )

    assert len(registry) == 16
    return registry


def load_registry(path: str | Path) -> dict[str, QuestionType]:
    with open(path, encoding="utf-8") as f:
        entries = json.load(f)
    registry = {}
    for entry in entries:
        qt = QuestionType.from_dict(entry)
        registry[qt.label] = qt
    return registry


def save_registry(registry: dict[str, QuestionType], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump([qt.to_dict() for qt in registry.values()], f, indent=2)
        f.write("\n")
