"""Most-frequent-tag POS tagger: a word -> tag lexicon loaded from a TSV
file, with ordered suffix rules as the out-of-vocabulary fallback.

Tags follow the Penn Treebank set. The tagger is context-free by design:
one surface form always gets the same tag, which keeps augmentation
deterministic and trivially parallel.
"""
from __future__ import annotations

import string
from pathlib import Path

_PUNCT = set(string.punctuation)

# Ordered OOV fallback rules; first match wins.
_SUFFIX_RULES: list[tuple[str, str]] = [
    ("ly", "RB"),
    ("ing", "VBG"),
    ("ed", "VBD"),
    ("tion", "NN"),
    ("sion", "NN"),
    ("ment", "NN"),
    ("ness", "NN"),
    ("ity", "NN"),
    ("ism", "NN"),
    ("ous", "JJ"),
    ("ful", "JJ"),
    ("ive", "JJ"),
    ("able", "JJ"),
    ("ible", "JJ"),
    ("al", "JJ"),
    ("ic", "JJ"),
    ("est", "JJS"),
    ("er", "NN"),
    ("ies", "NNS"),
    ("es", "NNS"),
    ("s", "NNS"),
]

_PUNCT_TAGS = {
    ".": ".", "!": ".", "?": ".", ",": ",", ";": ":", ":": ":",
    "(": "(", ")": ")", '"': "''", "'": "''", "`": "``",
}


class LexiconTagger:
    def __init__(self, lexicon_path: str | Path):
        self.lexicon: dict[str, str] = {}
        with open(lexicon_path, encoding="utf-8") as fh:
            for raw in fh:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) != 2:
                    raise ValueError(f"{lexicon_path}: bad lexicon line {raw!r}")
                word, tag = parts
                self.lexicon[word.lower()] = tag

    def tag(self, surface: str) -> str:
        lowered = surface.lower()
        if lowered in self.lexicon:
            return self.lexicon[lowered]
        if all(c in _PUNCT for c in surface):
            return _PUNCT_TAGS.get(surface, "SYM")
        if _is_number(surface):
            return "CD"
        for suffix, tag in _SUFFIX_RULES:
            if len(lowered) > len(suffix) + 1 and lowered.endswith(suffix):
                return tag
        if surface[0].isupper():
            return "NNP"
        return "NN"


def _is_number(surface: str) -> bool:
    stripped = surface.replace(",", "").replace(".", "").replace("-", "")
    return bool(stripped) and stripped.isdigit()
