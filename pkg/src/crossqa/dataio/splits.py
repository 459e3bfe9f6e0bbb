"""Split assignment at context granularity.

Whole context components (examples transitively sharing a table, a gold
paragraph, or a gold image) are assigned together, so no such component is
ever shared between train and dev/test.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .examples import Example, SPLITS

# Published reference split sizes, normalized to ratios by `ratio_preset`.
PAPER_SPLIT_SIZES = {"train": 23817, "dev": 2441, "test": 3660}


def ratio_preset(name: str) -> tuple[float, float, float]:
    if name == "paper":
        total = sum(PAPER_SPLIT_SIZES.values())
        return (
            PAPER_SPLIT_SIZES["train"] / total,
            PAPER_SPLIT_SIZES["dev"] / total,
            PAPER_SPLIT_SIZES["test"] / total,
        )
    raise ValueError(f"unknown ratio preset '{name}'")


@dataclass(frozen=True)
class SplitResult:
    assignment: dict[str, str]          # qid -> split
    achieved_ratios: tuple[float, float, float]
    requested_ratios: tuple[float, float, float]

    def apply(self, examples: list[Example]) -> list[Example]:
        return [ex.with_split(self.assignment[ex.qid]) for ex in examples]


class _UnionFind:
    def __init__(self):
        self.parent: dict[str, str] = {}

    def find(self, x: str) -> str:
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _example_keys(ex: Example) -> list[str]:
    keys = [f"ctx:{ex.context.context_id}"]
    for p in ex.context.gold_paragraphs():
        keys.append(f"par:{p.id}")
    for img in ex.context.gold_images():
        keys.append(f"img:{img.id}")
    return keys


def split_dataset(
    examples: list[Example],
    ratios: tuple[float, float, float] = (0.8, 0.1, 0.1),
    seed: int = 0,
) -> SplitResult:
    """Assign whole context components to train/dev/test, seeded.

    Ratios must sum to 1. Because assignment is component-granular, the
    achieved ratios can deviate from the request; they are reported in the
    result rather than raised.
    """
    if abs(sum(ratios) - 1.0) > 1e-9:
        raise ValueError(f"ratios must sum to 1, got {ratios}")
    if not examples:
        raise ValueError("cannot split an empty dataset")

    uf = _UnionFind()
    for ex in examples:
        keys = _example_keys(ex)
        for key in keys[1:]:
            uf.union(keys[0], key)

    components: dict[str, list[Example]] = {}
    for ex in examples:
        root = uf.find(f"ctx:{ex.context.context_id}")
        components.setdefault(root, []).append(ex)

    component_list = sorted(components.items(), key=lambda kv: kv[0])
    rng = random.Random(seed)
    rng.shuffle(component_list)

    total = len(examples)
    targets = {split: ratios[i] * total for i, split in enumerate(SPLITS)}
    filled = {split: 0 for split in SPLITS}
    assignment: dict[str, str] = {}
    for _, members in component_list:
        # Assign to the split with the largest remaining deficit.
        split = max(SPLITS, key=lambda s: (targets[s] - filled[s], s))
        for ex in members:
            assignment[ex.qid] = split
        filled[split] += len(members)

    achieved = tuple(filled[s] / total for s in SPLITS)
    return SplitResult(assignment=assignment, achieved_ratios=achieved, requested_ratios=tuple(ratios))


def audit_split_disjointness(examples: list[Example]) -> list[str]:
    """Violations of train vs dev/test disjointness over tables, gold
    paragraphs, and gold images. Empty list means the split is clean."""
    seen: dict[str, set[str]] = {}
    for ex in examples:
        partition = "train" if ex.split == "train" else "eval"
        for key in _example_keys(ex):
            seen.setdefault(key, set()).add(partition)
    return sorted(key for key, partitions in seen.items() if len(partitions) > 1)
