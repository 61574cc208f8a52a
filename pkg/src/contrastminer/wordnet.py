"""Reader for WordNet databases in the standard Princeton file layout.

Parses ``index.noun``/``index.verb`` and ``data.noun``/``data.verb`` from a
database directory. Only the parts needed for token augmentation are kept:
lemma -> synsets, hypernym edges (pointer symbols ``@`` and ``@i``) and each
synset's lexicographer file name. Synset offsets are treated as opaque keys,
so both the full Princeton distribution and small custom databases in the
same format load fine.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

# Canonical lexicographer file names, indexed by lex_filenum.
LEXNAMES = [
    "adj.all", "adj.pert", "adv.all", "noun.Tops", "noun.act", "noun.animal",
    "noun.artifact", "noun.attribute", "noun.body", "noun.cognition",
    "noun.communication", "noun.event", "noun.feeling", "noun.food",
    "noun.group", "noun.location", "noun.motive", "noun.object",
    "noun.person", "noun.phenomenon", "noun.plant", "noun.possession",
    "noun.process", "noun.quantity", "noun.relation", "noun.shape",
    "noun.state", "noun.substance", "noun.time", "verb.body", "verb.change",
    "verb.cognition", "verb.communication", "verb.competition",
    "verb.consumption", "verb.contact", "verb.creation", "verb.emotion",
    "verb.motion", "verb.perception", "verb.possession", "verb.social",
    "verb.stative", "verb.weather", "adj.ppl",
]

_HYPERNYM_PTRS = {"@", "@i"}


class WordNetFormatError(Exception):
    """Raised when a database file does not follow the expected layout."""


@dataclass(frozen=True)
class Synset:
    key: str                 # "<pos>:<offset>"
    lexname: str
    words: tuple[str, ...]   # lemmas, underscores preserved, lowercased
    hypernyms: tuple[str, ...]  # keys of hypernym synsets

    @property
    def head_word(self) -> str:
        return self.words[0]


class WordNetReader:
    """In-memory view of the noun and verb databases under one directory."""

    def __init__(self, wordnet_dir: str | Path):
        self.dir = Path(wordnet_dir)
        self.synsets: dict[str, Synset] = {}
        self._index: dict[tuple[str, str], tuple[str, ...]] = {}  # (pos, lemma) -> synset keys
        for pos, suffix in (("n", "noun"), ("v", "verb")):
            data_path = self.dir / f"data.{suffix}"
            index_path = self.dir / f"index.{suffix}"
            if not data_path.exists() or not index_path.exists():
                raise WordNetFormatError(f"missing WordNet files for '{suffix}' under {self.dir}")
            self._load_data(data_path, pos)
            self._load_index(index_path, pos)

    def _load_data(self, path: Path, pos: str) -> None:
        with open(path, encoding="utf-8") as fh:
            for raw in fh:
                if raw.startswith(" ") or not raw.strip():
                    continue  # license header / blanks
                line = raw.split("|", 1)[0].split()
                try:
                    offset, lex_filenum = line[0], int(line[1])
                    w_cnt = int(line[3], 16)
                    words = tuple(line[4 + 2 * i].lower() for i in range(w_cnt))
                    p_idx = 4 + 2 * w_cnt
                    p_cnt = int(line[p_idx])
                    hypernyms = []
                    for i in range(p_cnt):
                        sym, tgt_off, tgt_pos, _ = line[p_idx + 1 + 4 * i: p_idx + 5 + 4 * i]
                        if sym in _HYPERNYM_PTRS:
                            hypernyms.append(f"{tgt_pos}:{tgt_off}")
                    lexname = LEXNAMES[lex_filenum]
                except (IndexError, ValueError) as e:
                    raise WordNetFormatError(f"{path}: bad data line {raw[:60]!r}: {e}") from e
                key = f"{pos}:{offset}"
                self.synsets[key] = Synset(key, lexname, words, tuple(hypernyms))

    def _load_index(self, path: Path, pos: str) -> None:
        with open(path, encoding="utf-8") as fh:
            for raw in fh:
                if raw.startswith(" ") or not raw.strip():
                    continue
                line = raw.split()
                try:
                    lemma = line[0].lower()
                    synset_cnt = int(line[2])
                    p_cnt = int(line[3])
                    offsets = line[4 + p_cnt + 2: 4 + p_cnt + 2 + synset_cnt]
                    if len(offsets) != synset_cnt:
                        raise ValueError("offset count mismatch")
                except (IndexError, ValueError) as e:
                    raise WordNetFormatError(f"{path}: bad index line {raw[:60]!r}: {e}") from e
                self._index[(pos, lemma)] = tuple(f"{pos}:{off}" for off in offsets)

    def senses(self, lemma: str) -> list[Synset]:
        """All noun and verb synsets for a lowercased lemma (nouns first)."""
        lemma = lemma.lower()
        out = []
        for pos in ("n", "v"):
            for key in self._index.get((pos, lemma), ()):
                syn = self.synsets.get(key)
                if syn is not None:
                    out.append(syn)
        return out

    def ancestry(self, synset: Synset, depth: int) -> set[str]:
        """Keys of the synset itself plus every hypernym ancestor within
        `depth` edges (breadth-first, shortest distance wins)."""
        seen = {synset.key}
        frontier = [synset.key]
        for _ in range(depth):
            nxt = []
            for key in frontier:
                syn = self.synsets.get(key)
                if syn is None:
                    continue
                for h in syn.hypernyms:
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            if not nxt:
                break
            frontier = nxt
        return seen
