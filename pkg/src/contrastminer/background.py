"""Foreground/background construction: general-English sampling, sIB-based
in-domain split, and the sentence-halves split.

Builders work on raw corpora (so the CLI can write plain JSONL splits) and
attach augmentation when handed an attribute provider, producing the
ContrastCorpus the pattern engine consumes. Labels are only ever read from
the validation corpus, never from the domain corpus being split.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .attributes import AttributeProvider, AugmentedSentence
from .clustering import BowSpace, Partition, SibParams, assign_nearest, sib_cluster
from .corpus import Corpus, Sentence, sample, tokenize

DEFAULT_N_BACKGROUND = 50_000


@dataclass(frozen=True)
class ContrastCorpus:
    foreground: list[AugmentedSentence]
    background: list[AugmentedSentence]
    method: str  # general_english | sib_split | halves_split
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.foreground or not self.background:
            raise ValueError("both contrast sides must be non-empty")
        fg_ids = {s.sentence_id for s in self.foreground}
        bg_ids = {s.sentence_id for s in self.background}
        if fg_ids & bg_ids:
            raise ValueError("a sentence id appears on both contrast sides")


@dataclass(frozen=True)
class ContrastSplit:
    """Raw two-corpus split plus provenance, before augmentation."""

    foreground: Corpus
    background: Corpus
    method: str
    provenance: dict = field(default_factory=dict)

    def augment(self, provider: AttributeProvider, threads: int = 1) -> ContrastCorpus:
        return ContrastCorpus(
            foreground=provider.augment_all(self.foreground, threads),
            background=provider.augment_all(self.background, threads),
            method=self.method,
            provenance=self.provenance,
        )


def split_general_english(
    domain: Corpus,
    general: Corpus,
    n_background: int = DEFAULT_N_BACKGROUND,
    seed: int = 13,
) -> ContrastSplit:
    """Foreground = the whole domain corpus; background = a seeded sample of
    the general corpus (capped at its size)."""
    if len(general) == 0:
        raise ValueError("general corpus is empty")
    n = min(n_background, len(general))
    background = sample(general, n, seed)
    return ContrastSplit(
        foreground=domain,
        background=background,
        method="general_english",
        provenance={"n_background": n, "seed": seed, "general": general.name},
    )


def split_sib(
    domain: Corpus,
    validation: Corpus,
    target_label: str,
    sib_params: SibParams,
) -> ContrastSplit:
    """Cluster the domain corpus with sIB, map the labeled validation set
    onto the clusters by the same merge-cost rule, and take the cluster with
    the highest validation prior of `target_label` as foreground (ties by
    cluster id). All remaining clusters form the background."""
    if len(domain) == 0:
        raise ValueError("domain corpus is empty")
    for s in validation:
        if s.label is None:
            raise ValueError(f"validation sentence {s.id!r} is unlabeled")
    space = BowSpace()
    domain_vecs = space.vectorize(domain)
    partition = sib_cluster(domain_vecs, sib_params, ids=domain.ids())
    val_vecs = space.vectorize(validation)
    val_clusters = assign_nearest(domain_vecs, partition, domain.ids(), val_vecs)

    n_clusters = max(partition.assignment.values()) + 1
    hits = [0] * n_clusters
    totals = [0] * n_clusters
    for s, c in zip(validation, val_clusters):
        totals[c] += 1
        if s.label == target_label:
            hits[c] += 1
    priors = [hits[c] / totals[c] if totals[c] else 0.0 for c in range(n_clusters)]
    chosen = max(range(n_clusters), key=lambda c: (priors[c], -c))

    fg = [s for s in domain if partition.assignment[s.id] == chosen]
    bg = [s for s in domain if partition.assignment[s.id] != chosen]
    if not bg:
        raise ValueError("chosen cluster covers the whole domain; nothing left as background")
    return ContrastSplit(
        foreground=Corpus(tuple(fg), domain.name + ":fg"),
        background=Corpus(tuple(bg), domain.name + ":bg"),
        method="sib_split",
        provenance={
            "target_label": target_label,
            "chosen_cluster": chosen,
            "cluster_priors": priors,
            "objective": partition.objective,
            "sib": sib_params.to_json(),
        },
    )


def split_halves(domain: Corpus) -> ContrastSplit:
    """Foreground = first halves of all sentences (ceiling split), derived
    ids `<id>:h1`; background = second halves, `<id>:h2`. Sentences with
    fewer than two tokens are dropped from both sides."""
    fg, bg = [], []
    for s in domain:
        tokens = tokenize(s.text)
        if len(tokens) < 2:
            continue
        cut = (len(tokens) + 1) // 2
        head = " ".join(t.surface for t in tokens[:cut])
        tail = " ".join(t.surface for t in tokens[cut:])
        fg.append(Sentence(f"{s.id}:h1", head, doc_id=s.doc_id))
        bg.append(Sentence(f"{s.id}:h2", tail, doc_id=s.doc_id))
    if not fg:
        raise ValueError("every sentence has fewer than two tokens; nothing to split")
    return ContrastSplit(
        foreground=Corpus(tuple(fg), domain.name + ":h1"),
        background=Corpus(tuple(bg), domain.name + ":h2"),
        method="halves_split",
        provenance={"dropped": len(domain) - len(fg)},
    )


def build_general_english(
    domain: Corpus,
    general: Corpus,
    n_background: int = DEFAULT_N_BACKGROUND,
    seed: int = 13,
    provider: Optional[AttributeProvider] = None,
    threads: int = 1,
) -> ContrastCorpus:
    provider = provider or AttributeProvider()
    return split_general_english(domain, general, n_background, seed).augment(provider, threads)


def build_sib_split(
    domain: Corpus,
    validation: Corpus,
    target_label: str,
    sib_params: SibParams,
    provider: Optional[AttributeProvider] = None,
    threads: int = 1,
) -> ContrastCorpus:
    provider = provider or AttributeProvider()
    return split_sib(domain, validation, target_label, sib_params).augment(provider, threads)


def build_halves_split(
    domain: Corpus,
    provider: Optional[AttributeProvider] = None,
    threads: int = 1,
) -> ContrastCorpus:
    provider = provider or AttributeProvider()
    return split_halves(domain).augment(provider, threads)
