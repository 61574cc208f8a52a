import pytest

from contrastminer.attributes import (
    Attribute,
    AttributeProvider,
    AttributeProviderConfig,
    attribute_vocabulary,
    augment,
)
from contrastminer.corpus import Sentence
from contrastminer.wordnet import WordNetReader


@pytest.fixture(scope="module")
def provider():
    return AttributeProvider()


def attrs_of(provider, text, index):
    aug = provider.augment(Sentence("t", text))
    return aug.attributes[index]


class TestWordNetReader:
    def test_loads_bundled_database(self, provider):
        wn = provider.wordnet
        assert wn.senses("argument")
        assert wn.senses("second")
        assert not wn.senses("zqzqzq")

    def test_hypernym_chain(self, provider):
        wn = provider.wordnet
        sense = wn.senses("second")[0]
        heads = {wn.synsets[k].head_word for k in wn.ancestry(sense, 5)}
        assert {"second", "ordinal_number", "rank", "status", "state"} <= heads

    def test_depth_limits_ancestry(self, provider):
        wn = provider.wordnet
        sense = wn.senses("second")[0]
        heads = {wn.synsets[k].head_word for k in wn.ancestry(sense, 1)}
        assert heads == {"second", "ordinal_number"}

    def test_missing_files_rejected(self, tmp_path):
        with pytest.raises(Exception, match="missing"):
            WordNetReader(tmp_path)


class TestAugment:
    def test_second_is_hyponym_of_rank(self, provider):
        assert Attribute("HYPERNYM", "rank") in attrs_of(provider, "our second argument", 1)

    def test_argument_superclass_communication(self, provider):
        assert Attribute("SUPERCLASS", "noun.communication") in attrs_of(
            provider, "our second argument", 2
        )

    def test_important_is_positive_sentiment(self, provider):
        assert Attribute("SENTIMENT", "positive") in attrs_of(provider, "this is important", 2)

    def test_oov_token_gets_text_and_pos_only(self, provider):
        attrs = attrs_of(provider, "zqzqzq", 0)
        assert Attribute("TEXT", "zqzqzq") in attrs
        assert sum(1 for a in attrs if a.namespace == "POS") == 1
        assert len(attrs) == 2

    def test_text_is_lowercased(self, provider):
        assert Attribute("TEXT", "section") in attrs_of(provider, "Section 5", 0)

    def test_at_most_one_pos_per_token(self, provider):
        aug = provider.augment(Sentence("t", "we think that it limits the argument"))
        for attrs in aug.attributes:
            assert sum(1 for a in attrs if a.namespace == "POS") <= 1

    def test_every_token_has_text(self, provider):
        aug = provider.augment(Sentence("t", "one two three ."))
        for attrs in aug.attributes:
            assert any(a.namespace == "TEXT" for a in attrs)

    def test_deterministic(self, provider):
        s = Sentence("t", "obviously , we acknowledge it's important")
        assert provider.augment(s) == provider.augment(s)

    def test_hypernym_closure_under_ancestors(self, provider):
        # every recorded hypernym's parents within depth are also recorded
        wn = provider.wordnet
        depth = provider.config.hypernym_depth
        aug = provider.augment(Sentence("t", "second argument prize win"))
        for low, attrs in zip([t.surface.lower() for t in aug.tokens], aug.attributes):
            recorded = {a.value for a in attrs if a.namespace == "HYPERNYM"}
            for sense in wn.senses(low):
                keys = wn.ancestry(sense, depth)
                for k in keys:
                    syn = wn.synsets[k]
                    assert syn.head_word in recorded

    def test_augment_function_accepts_config(self):
        aug = augment(Sentence("t", "hello"), AttributeProviderConfig())
        assert aug.sentence_id == "t"

    def test_pos_none_disables_tagging(self):
        p = AttributeProvider(AttributeProviderConfig(pos_model="none"))
        attrs = p.augment(Sentence("t", "hello"))
        assert not any(a.namespace == "POS" for a in attrs.attributes[0])


class TestGazetteer:
    def test_multiword_longest_match_marks_all_tokens(self, tmp_path, provider):
        gaz = tmp_path / "gaz.tsv"
        gaz.write_text("new york\tLOCATION\nnew york city\tLOCATION\nacme\tORG\n", encoding="utf-8")
        p = AttributeProvider(AttributeProviderConfig(gazetteer_path=gaz))
        aug = p.augment(Sentence("t", "Acme opened in New York City today"))
        ner = [
            {a.value for a in attrs if a.namespace == "NER"} for attrs in aug.attributes
        ]
        assert ner[0] == {"ORG"}
        assert ner[3] == ner[4] == ner[5] == {"LOCATION"}
        assert ner[6] == set()

    def test_case_insensitive(self, tmp_path):
        gaz = tmp_path / "gaz.tsv"
        gaz.write_text("london\tLOCATION\n", encoding="utf-8")
        p = AttributeProvider(AttributeProviderConfig(gazetteer_path=gaz))
        aug = p.augment(Sentence("t", "LONDON calling"))
        assert Attribute("NER", "LOCATION") in aug.attributes[0]

    def test_bad_gazetteer_fails_at_construction(self, tmp_path):
        gaz = tmp_path / "gaz.tsv"
        gaz.write_text("no-type-column\n", encoding="utf-8")
        with pytest.raises(ValueError):
            AttributeProvider(AttributeProviderConfig(gazetteer_path=gaz))


class TestAttributeVocabulary:
    def make_corpus(self, provider, texts):
        return [provider.augment(Sentence(f"s{i}", t)) for i, t in enumerate(texts)]

    def test_zero_threshold_keeps_everything(self, provider):
        corpus = self.make_corpus(provider, ["alpha beta", "beta gamma"])
        vocab = attribute_vocabulary(corpus, 0.0)
        assert Attribute("TEXT", "alpha") in vocab
        assert Attribute("TEXT", "gamma") in vocab

    def test_threshold_excludes_rare(self, provider):
        texts = ["common rare"] + ["common filler"] * 999
        corpus = self.make_corpus(provider, texts)
        vocab = attribute_vocabulary(corpus, 0.005)
        # 1/1000 = 0.001 < 0.005 -> excluded; 4/1000 would also be excluded
        assert Attribute("TEXT", "rare") not in vocab
        assert Attribute("TEXT", "common") in vocab

    def test_small_corpus_ceiling_of_one(self, provider):
        corpus = self.make_corpus(provider, [f"word{i} shared" for i in range(200)])
        vocab = attribute_vocabulary(corpus, 0.005)
        # threshold is 1 sentence: every attribute qualifies
        assert Attribute("TEXT", "word0") in vocab

    def test_monotone_in_threshold(self, provider):
        corpus = self.make_corpus(
            provider, ["a b", "a c", "a d", "b c", "e e", "f a", "b b", "g h"]
        )
        sizes = [len(attribute_vocabulary(corpus, f)) for f in (0.0, 0.2, 0.4, 0.8, 1.0)]
        assert sizes == sorted(sizes, reverse=True)

    def test_empty_corpus_rejected(self):
        with pytest.raises(ValueError):
            attribute_vocabulary([], 0.1)

    def test_exact_boundary_inclusive(self, provider):
        texts = ["edge x", "edge y", "z w", "z q"]
        corpus = self.make_corpus(provider, texts)
        vocab = attribute_vocabulary(corpus, 0.5)
        assert Attribute("TEXT", "edge") in vocab
