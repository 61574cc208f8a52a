import json
from pathlib import Path

import pytest

from contrastminer.attributes import AttributeProvider
from contrastminer.corpus import Corpus, Sentence, save_jsonl
from contrastminer.patterns import GraspParams, run_grasp


@pytest.fixture(scope="session")
def shared_provider():
    return AttributeProvider()


FG_TEXTS = [
    "so first let us address the question",
    "our second argument is about taxes",
    "my first overview is short",
    "the third claim is that prices rise",
    "so our fourth point is a question of trust",
    "first we state the argument plainly",
    "second the reply is simple",
    "our third message is clear",
    "the first answer is yes",
    "so the second statement stands",
]
BG_TEXTS = [
    "the cat sat on the mat",
    "it rained all day yesterday",
    "she bought bread and milk",
    "the train was late again",
    "we watched a film at home",
    "he plays football on sunday",
    "dinner was pasta with sauce",
    "the shop closes at five",
    "birds sang in the garden",
    "my phone needs charging",
]


def _labeled(texts, prefix, label=None):
    return [
        Sentence(f"{prefix}{i}", t, label=label) for i, t in enumerate(texts)
    ]


@pytest.fixture(scope="session")
def tiny_fg_corpus():
    return Corpus(tuple(_labeled(FG_TEXTS, "f")), "tiny-fg")


@pytest.fixture(scope="session")
def tiny_bg_corpus():
    return Corpus(tuple(_labeled(BG_TEXTS, "b")), "tiny-bg")


@pytest.fixture(scope="session")
def tiny_ruleset(shared_provider, tiny_fg_corpus, tiny_bg_corpus):
    class Contrast:
        foreground = shared_provider.augment_all(tiny_fg_corpus)
        background = shared_provider.augment_all(tiny_bg_corpus)

    params = GraspParams(k1=50, k2=10, max_len=3, t1=0.05, w=5, scorer="f_beta", beta=0.1)
    return run_grasp(Contrast(), params)


@pytest.fixture()
def tiny_files(tmp_path, tiny_fg_corpus, tiny_bg_corpus, tiny_ruleset):
    fg = tmp_path / "fg.jsonl"
    bg = tmp_path / "bg.jsonl"
    rules = tmp_path / "rules.json"
    save_jsonl(tiny_fg_corpus, fg)
    save_jsonl(tiny_bg_corpus, bg)
    rules.write_text(tiny_ruleset.dumps() + "\n", encoding="utf-8")
    return {"fg": fg, "bg": bg, "rules": rules, "dir": tmp_path}
