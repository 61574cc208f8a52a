"""Token augmentation: each token gets a set of namespaced attributes.

Namespaces: TEXT (lowercased surface), POS (Penn tag from the bundled
lexicon tagger), HYPERNYM (the token's WordNet noun/verb synsets and all
their hypernym ancestors up to a configurable depth, union over senses, no
sense disambiguation), SUPERCLASS (each sense's lexicographer file name),
SENTIMENT (positive/negative word lists) and NER (gazetteer lookup,
longest match, all covered tokens marked). LEMMA is reserved and off by
default.

The provider loads every lexicon at construction time; augmentation itself
is pure and safe to run in parallel.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .corpus import Sentence, Token
from .postag import LexiconTagger
from .wordnet import WordNetReader

NAMESPACES = ("TEXT", "LEMMA", "POS", "HYPERNYM", "SUPERCLASS", "SENTIMENT", "NER")

_DATA_DIR = Path(__file__).parent / "data"


@total_ordering
@dataclass(frozen=True)
class Attribute:
    namespace: str
    value: str

    def __post_init__(self):
        if self.namespace not in NAMESPACES:
            raise ValueError(f"unknown attribute namespace {self.namespace!r}")
        if not self.value:
            raise ValueError("attribute value must be non-empty")

    def render(self) -> str:
        return f"{self.namespace}:{self.value}"

    @staticmethod
    def parse(text: str) -> "Attribute":
        ns, sep, value = text.partition(":")
        if not sep:
            raise ValueError(f"attribute {text!r} lacks a namespace prefix")
        return Attribute(ns, value)

    def _key(self) -> tuple[str, str]:
        return (self.namespace, self.value)

    def __lt__(self, other: "Attribute") -> bool:
        return self._key() < other._key()


@dataclass(frozen=True)
class AugmentedSentence:
    """A sentence reduced to what the pattern engine may see: an id and
    per-token attribute sets. Deliberately label-free."""

    sentence_id: str
    tokens: tuple[Token, ...]
    attributes: tuple[frozenset[Attribute], ...]

    def __post_init__(self):
        if len(self.tokens) != len(self.attributes):
            raise ValueError("tokens and attribute sets must align")

    def __len__(self) -> int:
        return len(self.tokens)

    def surfaces(self) -> list[str]:
        return [t.surface for t in self.tokens]


@dataclass(frozen=True)
class AttributeProviderConfig:
    wordnet_dir: Path = _DATA_DIR / "wordnet"
    sentiment_pos_path: Path = _DATA_DIR / "sentiment_positive.txt"
    sentiment_neg_path: Path = _DATA_DIR / "sentiment_negative.txt"
    pos_lexicon_path: Path = _DATA_DIR / "pos_lexicon.tsv"
    gazetteer_path: Optional[Path] = None
    pos_model: str = "lexicon"  # "lexicon" or "none"
    hypernym_depth: int = 5

    def __post_init__(self):
        if self.hypernym_depth < 1:
            raise ValueError("hypernym_depth must be >= 1")
        if self.pos_model not in ("lexicon", "none"):
            raise ValueError(f"unknown pos_model {self.pos_model!r}")


def _load_wordlist(path: Path) -> frozenset[str]:
    words = set()
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            w = raw.strip().lower()
            if w and not w.startswith("#"):
                words.add(w)
    return frozenset(words)


def _load_gazetteer(path: Path) -> dict[tuple[str, ...], str]:
    entries: dict[tuple[str, ...], str] = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            name, sep, etype = line.partition("\t")
            if not sep or not etype.strip():
                raise ValueError(f"{path}: gazetteer line needs name<TAB>type: {raw!r}")
            entries[tuple(name.lower().split())] = etype.strip()
    return entries


class AttributeProvider:
    """Holds the loaded lexicons; immutable after construction."""

    def __init__(self, config: AttributeProviderConfig | None = None):
        self.config = config or AttributeProviderConfig()
        cfg = self.config
        self.wordnet = WordNetReader(cfg.wordnet_dir)
        self.positive = _load_wordlist(Path(cfg.sentiment_pos_path))
        self.negative = _load_wordlist(Path(cfg.sentiment_neg_path))
        self.tagger = LexiconTagger(cfg.pos_lexicon_path) if cfg.pos_model == "lexicon" else None
        self.gazetteer = _load_gazetteer(Path(cfg.gazetteer_path)) if cfg.gazetteer_path else {}
        self._gaz_max_len = max((len(k) for k in self.gazetteer), default=0)
        self._wordnet_cache: dict[str, frozenset[Attribute]] = {}

    def _wordnet_attributes(self, lowered: str) -> frozenset[Attribute]:
        cached = self._wordnet_cache.get(lowered)
        if cached is not None:
            return cached
        attrs: set[Attribute] = set()
        for sense in self.wordnet.senses(lowered):
            attrs.add(Attribute("SUPERCLASS", sense.lexname))
            for key in self.wordnet.ancestry(sense, self.config.hypernym_depth):
                syn = self.wordnet.synsets.get(key)
                if syn is not None:
                    attrs.add(Attribute("HYPERNYM", syn.head_word))
        result = frozenset(attrs)
        self._wordnet_cache[lowered] = result
        return result

    def _ner_spans(self, lowered: list[str]) -> list[Optional[str]]:
        types: list[Optional[str]] = [None] * len(lowered)
        if not self.gazetteer:
            return types
        i = 0
        while i < len(lowered):
            match_len, match_type = 0, None
            for span in range(min(self._gaz_max_len, len(lowered) - i), 0, -1):
                etype = self.gazetteer.get(tuple(lowered[i:i + span]))
                if etype is not None:
                    match_len, match_type = span, etype
                    break
            if match_type is not None:
                for j in range(i, i + match_len):
                    types[j] = match_type
                i += match_len
            else:
                i += 1
        return types

    def augment(self, sentence: Sentence) -> AugmentedSentence:
        tokens = tuple(sentence.tokens())
        lowered = [t.surface.lower() for t in tokens]
        ner = self._ner_spans(lowered)
        attr_sets = []
        for tok, low, etype in zip(tokens, lowered, ner):
            attrs = {Attribute("TEXT", low)}
            if self.tagger is not None:
                attrs.add(Attribute("POS", self.tagger.tag(tok.surface)))
            attrs |= self._wordnet_attributes(low)
            if low in self.positive:
                attrs.add(Attribute("SENTIMENT", "positive"))
            if low in self.negative:
                attrs.add(Attribute("SENTIMENT", "negative"))
            if etype is not None:
                attrs.add(Attribute("NER", etype))
            attr_sets.append(frozenset(attrs))
        return AugmentedSentence(sentence.id, tokens, tuple(attr_sets))

    def augment_all(self, sentences: Iterable[Sentence], threads: int = 1) -> list[AugmentedSentence]:
        sentences = list(sentences)
        if threads <= 1 or len(sentences) < 64:
            return [self.augment(s) for s in sentences]
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(self.augment, sentences, chunksize=64))


def augment(sentence: Sentence, provider: AttributeProvider | AttributeProviderConfig) -> AugmentedSentence:
    if isinstance(provider, AttributeProviderConfig):
        provider = AttributeProvider(provider)
    return provider.augment(sentence)


def attribute_vocabulary(corpus: Sequence[AugmentedSentence], min_freq: float) -> set[Attribute]:
    """Attributes whose sentence-level document frequency is >= min_freq
    (fraction of sentences containing at least one token with the attribute).
    """
    if not 0 <= min_freq <= 1:
        raise ValueError("min_freq must be within [0, 1]")
    if not corpus:
        raise ValueError("attribute_vocabulary needs a non-empty corpus")
    doc_freq: dict[Attribute, int] = {}
    for aug in corpus:
        present: set[Attribute] = set()
        for attrs in aug.attributes:
            present |= attrs
        for a in present:
            doc_freq[a] = doc_freq.get(a, 0) + 1
    threshold = min_freq * len(corpus)
    return {a for a, df in doc_freq.items() if df >= threshold}
