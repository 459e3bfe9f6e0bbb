"""Dataset serialization: JSON-lines per split plus a manifest.

Writers are deterministic: stable field order, no timestamps, examples in the
order given. read_dataset(write_dataset(x)) is structurally the identity.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .examples import Example, SPLITS

MANIFEST_NAME = "manifest.json"


class DatasetError(ValueError):
    pass


def config_hash(config: dict) -> str:
    canonical = json.dumps(config, sort_keys=True, ensure_ascii=False)
    return hashlib.sha1(canonical.encode("utf-8")).hexdigest()[:12]


def write_examples_file(examples: list[Example], path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    seen: set[str] = set()
    with open(path, "w", encoding="utf-8") as f:
        for ex in examples:
            if ex.qid in seen:
                raise DatasetError(f"duplicate qid '{ex.qid}'")
            seen.add(ex.qid)
            f.write(json.dumps(ex.to_dict(), ensure_ascii=False) + "\n")


def read_examples_file(path: str | Path) -> list[Example]:
    examples = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                d = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DatasetError(f"{path}:{lineno}: malformed JSON line ({exc})") from exc
            try:
                ex = Example.from_dict(d)
            except (KeyError, ValueError) as exc:
                raise DatasetError(f"{path}:{lineno}: bad example ({exc})") from exc
            if ex.qid in seen:
                raise DatasetError(f"{path}:{lineno}: duplicate qid '{ex.qid}'")
            seen.add(ex.qid)
            examples.append(ex)
    return examples


def write_dataset(
    examples: list[Example],
    out_dir: str | Path,
    seed: int | None = None,
    config: dict | None = None,
) -> dict:
    """Write per-split JSONL files and the manifest; returns the manifest."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    all_ids = [ex.qid for ex in examples]
    if len(set(all_ids)) != len(all_ids):
        dupes = sorted({q for q in all_ids if all_ids.count(q) > 1})
        raise DatasetError(f"duplicate qids across dataset: {dupes[:5]}")

    files = {}
    counts = {}
    for split in SPLITS:
        split_examples = [ex for ex in examples if ex.split == split]
        filename = f"{split}.jsonl"
        write_examples_file(split_examples, out_dir / filename)
        files[split] = filename
        counts[split] = len(split_examples)

    manifest = {
        "counts": {**counts, "total": len(examples)},
        "seed": seed,
        "config_hash": config_hash(config or {}),
        "files": files,
    }
    with open(out_dir / MANIFEST_NAME, "w", encoding="utf-8") as f:
        json.dump(manifest, f, indent=2, ensure_ascii=False)
        f.write("\n")
    return manifest


def read_dataset(path: str | Path) -> list[Example]:
    """Read a dataset directory (via its manifest) or a single JSONL file."""
    path = Path(path)
    if path.is_dir():
        manifest_path = path / MANIFEST_NAME
        if manifest_path.exists():
            with open(manifest_path, encoding="utf-8") as f:
                manifest = json.load(f)
            examples = []
            for split in SPLITS:
                filename = manifest.get("files", {}).get(split)
                if filename and (path / filename).exists():
                    examples.extend(read_examples_file(path / filename))
            return examples
        examples = []
        for file in sorted(path.glob("*.jsonl")):
            examples.extend(read_examples_file(file))
        return examples
    return read_examples_file(path)
