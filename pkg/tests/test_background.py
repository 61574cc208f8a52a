import pytest

from contrastminer.attributes import AttributeProvider
from contrastminer.background import (
    build_halves_split,
    split_general_english,
    split_halves,
    split_sib,
)
from contrastminer.clustering import SibParams
from contrastminer.corpus import Corpus, Sentence, tokenize


@pytest.fixture(scope="module")
def provider():
    return AttributeProvider()


def corpus_of(texts, labels=None, name="c"):
    labels = labels or [None] * len(texts)
    return Corpus(
        tuple(Sentence(f"s{i}", t, label=l) for i, (t, l) in enumerate(zip(texts, labels))),
        name,
    )


class TestGeneralEnglish:
    def test_foreground_is_whole_domain(self):
        domain = corpus_of(["a b", "c d", "e f"])
        general = corpus_of([f"g {i}" for i in range(20)], name="ge")
        split = split_general_english(domain, general, n_background=5, seed=1)
        assert split.foreground is domain
        assert len(split.background) == 5

    def test_background_capped_at_general_size(self):
        domain = corpus_of(["a"])
        general = corpus_of(["x y", "z w"])
        split = split_general_english(domain, general, n_background=50_000, seed=1)
        assert [s.id for s in split.background] == ["s0", "s1"]

    def test_deterministic(self):
        domain = corpus_of(["a"])
        general = corpus_of([f"w {i}" for i in range(100)])
        ids1 = [s.id for s in split_general_english(domain, general, 10, seed=4).background]
        ids2 = [s.id for s in split_general_english(domain, general, 10, seed=4).background]
        assert ids1 == ids2

    def test_empty_general_rejected(self):
        with pytest.raises(ValueError):
            split_general_english(corpus_of(["a"]), Corpus(()), 10, 1)


class TestSibSplit:
    def disjoint_fixture(self):
        domain_texts = ["cat dog pet", "dog cat fur", "pet cat dog", "cat fur pet"]
        domain_texts += ["sql rust code", "rust sql bug", "code sql rust", "rust bug code"]
        domain = corpus_of(domain_texts, name="d")
        val = corpus_of(
            ["cat pet dog", "dog fur cat", "sql code rust", "rust code bug"],
            labels=["target", "target", "other", "other"],
            name="v",
        )
        return domain, val

    def test_disjoint_vocab_target_cluster_wins(self):
        domain, val = self.disjoint_fixture()
        split = split_sib(domain, val, "target", SibParams(n_clusters=2, seed=3))
        fg_ids = {s.id for s in split.foreground}
        assert fg_ids == {"s0", "s1", "s2", "s3"}
        assert {s.id for s in split.background} == {"s4", "s5", "s6", "s7"}

    def test_all_equal_priors_choose_cluster_zero(self):
        # validation sentences that sit equally in both clusters
        domain_texts = ["aa bb", "bb aa", "cc dd", "dd cc"]
        domain = corpus_of(domain_texts)
        val = corpus_of(["aa bb", "cc dd"], labels=["t", "t"])
        split = split_sib(domain, val, "t", SibParams(n_clusters=2, seed=1))
        assert split.provenance["chosen_cluster"] == 0

    def test_chosen_prior_exceeds_corpus_prior(self):
        # spammy texts share vocabulary; ham is diverse
        spam = [f"win cash prize now {i % 2}" for i in range(6)]
        ham = [f"see you at {w}" for w in ("home", "school", "five", "noon", "work", "gym")]
        domain = corpus_of(spam + ham, name="d")
        val = corpus_of(
            ["win cash now", "claim prize cash", "see you home", "at school then", "you at work"],
            labels=["spam", "spam", "ham", "ham", "ham"],
        )
        split = split_sib(domain, val, "spam", SibParams(n_clusters=2, seed=2))
        chosen = split.provenance["chosen_cluster"]
        corpus_prior = 2 / 5
        assert split.provenance["cluster_priors"][chosen] > corpus_prior

    def test_union_is_domain(self):
        domain, val = self.disjoint_fixture()
        split = split_sib(domain, val, "target", SibParams(n_clusters=2, seed=3))
        got = {s.id for s in split.foreground} | {s.id for s in split.background}
        assert got == set(domain.ids())

    def test_unlabeled_validation_rejected(self):
        domain, _ = self.disjoint_fixture()
        bad_val = corpus_of(["cat dog"], labels=[None])
        with pytest.raises(ValueError, match="unlabeled"):
            split_sib(domain, bad_val, "t", SibParams(n_clusters=2))


class TestHalvesSplit:
    def test_ceiling_split(self):
        domain = corpus_of(["one two three four five six seven"])
        split = split_halves(domain)
        assert split.foreground[0].text == "one two three four"
        assert split.background[0].text == "five six seven"

    def test_single_token_sentences_dropped(self):
        domain = corpus_of(["alone", "two words"])
        split = split_halves(domain)
        assert [s.id for s in split.foreground] == ["s1:h1"]
        assert split.provenance["dropped"] == 1

    def test_all_short_is_error(self):
        with pytest.raises(ValueError):
            split_halves(corpus_of(["a", "b"]))

    def test_ids_derived_and_disjoint(self):
        domain = corpus_of(["a b c", "d e"])
        split = split_halves(domain)
        assert [s.id for s in split.foreground] == ["s0:h1", "s1:h1"]
        assert [s.id for s in split.background] == ["s0:h2", "s1:h2"]

    def test_concatenation_reconstructs_tokens(self):
        texts = ["a b c d e", "x y z", "p q r s", "hello there, world."]
        domain = corpus_of(texts)
        split = split_halves(domain)
        for orig, h1, h2 in zip(domain, split.foreground, split.background):
            orig_tokens = [t.surface for t in tokenize(orig.text)]
            got = [t.surface for t in tokenize(h1.text)] + [t.surface for t in tokenize(h2.text)]
            assert got == orig_tokens

    def test_augmented_contrast(self, provider):
        domain = corpus_of(["our second argument is about", "the cat sat down"])
        contrast = build_halves_split(domain, provider)
        assert contrast.method == "halves_split"
        assert len(contrast.foreground) == 2
        assert contrast.foreground[0].surfaces() == ["our", "second", "argument"]
