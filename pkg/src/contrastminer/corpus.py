"""Corpus data model: sentences, tokenization, JSONL I/O, sampling and splits.

A corpus is an ordered, immutable collection of sentences. Sentences arrive
either as raw text (tokenized on demand) or pre-tokenized with spaces, in
which case the tokenizer is a no-op.
"""
from __future__ import annotations

import json
import math
import string
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional

_PUNCT = set(string.punctuation)


class CorpusFormatError(Exception):
    """Raised for malformed corpus files (bad JSON, missing fields, dup ids)."""


@dataclass(frozen=True)
class Token:
    surface: str
    index: int

    def __post_init__(self):
        if not self.surface:
            raise ValueError("token surface must be non-empty")


@dataclass(frozen=True)
class Sentence:
    id: str
    text: str
    label: Optional[str] = None
    doc_id: Optional[str] = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("sentence id must be non-empty")
        if not self.text.strip():
            raise ValueError(f"sentence {self.id!r} has empty text")

    def tokens(self) -> list[Token]:
        return tokenize(self.text)


def tokenize(text: str) -> list[Token]:
    """Split on whitespace, then peel leading/trailing punctuation into
    their own tokens. A chunk made entirely of punctuation stays whole, so
    the tokenizer is a no-op on text that is already space-separated.
    Surfaces keep their original casing.
    """
    surfaces: list[str] = []
    for chunk in text.split():
        lead: list[str] = []
        trail: list[str] = []
        while len(chunk) > 1 and chunk[0] in _PUNCT and any(c not in _PUNCT for c in chunk):
            lead.append(chunk[0])
            chunk = chunk[1:]
        while len(chunk) > 1 and chunk[-1] in _PUNCT and any(c not in _PUNCT for c in chunk):
            trail.append(chunk[-1])
            chunk = chunk[:-1]
        surfaces.extend(lead)
        surfaces.append(chunk)
        surfaces.extend(reversed(trail))
    return [Token(surface, i) for i, surface in enumerate(surfaces)]


@dataclass(frozen=True)
class Corpus:
    sentences: tuple[Sentence, ...]
    name: str = ""

    def __post_init__(self):
        seen = set()
        for s in self.sentences:
            if s.id in seen:
                raise CorpusFormatError(f"duplicate sentence id {s.id!r} in corpus {self.name!r}")
            seen.add(s.id)

    @staticmethod
    def from_sentences(sentences: Iterable[Sentence], name: str = "") -> "Corpus":
        return Corpus(tuple(sentences), name)

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self) -> Iterator[Sentence]:
        return iter(self.sentences)

    def __getitem__(self, i: int) -> Sentence:
        return self.sentences[i]

    def ids(self) -> list[str]:
        return [s.id for s in self.sentences]

    def labels(self) -> list[Optional[str]]:
        return [s.label for s in self.sentences]


def load_jsonl(path: str | Path, name: str = "") -> Corpus:
    """Load a corpus from a JSONL file: one object per line with a required
    "text" field and optional "id", "label", "doc_id". Missing ids are
    synthesized as zero-padded line numbers (0-based).
    """
    path = Path(path)
    sentences: list[Sentence] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as e:
                raise CorpusFormatError(f"{path}: malformed JSON on line {lineno + 1}: {e}") from e
            if not isinstance(obj, dict) or "text" not in obj:
                raise CorpusFormatError(f"{path}: line {lineno + 1} lacks a 'text' field")
            sid = obj.get("id")
            if sid is None:
                sid = f"{lineno:06d}"
            try:
                sentences.append(
                    Sentence(
                        id=str(sid),
                        text=str(obj["text"]),
                        label=None if obj.get("label") is None else str(obj["label"]),
                        doc_id=None if obj.get("doc_id") is None else str(obj["doc_id"]),
                    )
                )
            except ValueError as e:
                raise CorpusFormatError(f"{path}: line {lineno + 1}: {e}") from e
    if not sentences:
        raise CorpusFormatError(f"{path}: empty corpus file")
    return Corpus(tuple(sentences), name or path.stem)


def save_jsonl(corpus: Corpus, path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        for s in corpus:
            obj: dict = {"id": s.id, "text": s.text}
            if s.label is not None:
                obj["label"] = s.label
            if s.doc_id is not None:
                obj["doc_id"] = s.doc_id
            fh.write(json.dumps(obj, ensure_ascii=False, sort_keys=True) + "\n")


class _StableRandom:
    """Thin wrapper over random.Random exposing only random(), the one
    method with a cross-version stream guarantee. Everything derived
    (shuffles, samples) is built on it so seeded runs are reproducible
    bit-for-bit forever.
    """

    def __init__(self, seed: int):
        import random

        self._r = random.Random(seed)

    def random(self) -> float:
        return self._r.random()

    def shuffle(self, items: list) -> None:
        # Fisher-Yates driven by random() only.
        for i in range(len(items) - 1, 0, -1):
            j = int(self.random() * (i + 1))
            if j > i:  # guard against random() returning values ~1.0
                j = i
            items[i], items[j] = items[j], items[i]

    def indices(self, n: int, k: int) -> list[int]:
        """k distinct indices out of range(n), uniform without replacement,
        in draw order."""
        picked = list(range(n))
        self.shuffle(picked)
        return picked[:k]


def sample(corpus: Corpus, n: int, seed: int) -> Corpus:
    """Uniform sample of n sentences without replacement, deterministic for
    a given seed. Output preserves corpus order."""
    if n > len(corpus):
        raise ValueError(f"cannot sample {n} sentences from a corpus of {len(corpus)}")
    rng = _StableRandom(seed)
    keep = sorted(rng.indices(len(corpus), n))
    return Corpus(tuple(corpus[i] for i in keep), corpus.name)


def stratified_validation_split(corpus: Corpus, size: int, seed: int) -> tuple[Corpus, Corpus]:
    """Split a fully labeled corpus into (validation, rest). The validation
    set has exactly `size` sentences with per-label proportions within one
    sentence of the corpus proportions (largest-remainder allocation).
    """
    if size > len(corpus):
        raise ValueError(f"validation size {size} exceeds corpus size {len(corpus)}")
    for s in corpus:
        if s.label is None:
            raise ValueError(f"sentence {s.id!r} is unlabeled; stratified split needs labels")

    by_label: dict[str, list[int]] = {}
    for i, s in enumerate(corpus):
        by_label.setdefault(s.label, []).append(i)

    n = len(corpus)
    labels = sorted(by_label)
    quotas = {lab: size * len(by_label[lab]) / n for lab in labels}
    alloc = {lab: math.floor(quotas[lab]) for lab in labels}
    shortfall = size - sum(alloc.values())
    # Hand out the remaining slots by largest fractional remainder (ties by label).
    for lab in sorted(labels, key=lambda l: (-(quotas[l] - alloc[l]), l))[:shortfall]:
        alloc[lab] += 1

    rng = _StableRandom(seed)
    chosen: set[int] = set()
    for lab in labels:
        pool = by_label[lab]
        k = min(alloc[lab], len(pool))
        chosen.update(pool[i] for i in rng.indices(len(pool), k))
    # Rounding can overshoot a tiny class; backfill from the largest classes.
    deficit = size - len(chosen)
    if deficit > 0:
        leftovers = [i for i in range(n) if i not in chosen]
        for i in leftovers[:deficit]:
            chosen.add(i)

    val = Corpus(tuple(corpus[i] for i in sorted(chosen)), corpus.name + ":validation")
    rest = Corpus(tuple(corpus[i] for i in range(n) if i not in chosen), corpus.name + ":rest")
    return val, rest
