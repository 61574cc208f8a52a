"""Comparison systems: the all-positive prior baseline, a multinomial
Naive Bayes trained on domain-vs-general bags of words, and clustering
turned into a one-vs-rest classifier.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .clustering import BowSpace, Partition, assign_nearest
from .corpus import Corpus, Sentence, tokenize
from .evaluation import Metrics, score_predictions

THRESHOLD_GRID = tuple(round(0.05 * i, 2) for i in range(1, 20))  # 0.05 .. 0.95


def prior_classify(corpus: Corpus) -> dict[str, bool]:
    """Predict every sentence positive; precision equals the prior."""
    return {s.id: True for s in corpus}


def _bag(text: str) -> list[str]:
    return [t.surface.lower() for t in tokenize(text)]


@dataclass(frozen=True)
class NbModel:
    vocabulary: tuple[str, ...]
    log_prior: tuple[float, float]       # (positive, negative)
    log_prob: tuple[tuple[float, ...], tuple[float, ...]]
    alpha: float

    def _index(self) -> dict[str, int]:
        return {t: i for i, t in enumerate(self.vocabulary)}

    def posterior(self, text: str, index: Optional[dict[str, int]] = None) -> float:
        """P(positive | text) under the multinomial model; unknown terms are
        ignored."""
        index = index or self._index()
        log_pos, log_neg = self.log_prior
        for term in _bag(text):
            i = index.get(term)
            if i is None:
                continue
            log_pos += self.log_prob[0][i]
            log_neg += self.log_prob[1][i]
        m = max(log_pos, log_neg)
        pos, neg = math.exp(log_pos - m), math.exp(log_neg - m)
        return pos / (pos + neg)

    def to_json(self) -> dict:
        return {
            "vocabulary": list(self.vocabulary),
            "log_prior": list(self.log_prior),
            "log_prob": [list(p) for p in self.log_prob],
            "alpha": self.alpha,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @staticmethod
    def from_json(obj: dict) -> "NbModel":
        return NbModel(
            vocabulary=tuple(obj["vocabulary"]),
            log_prior=tuple(obj["log_prior"]),
            log_prob=tuple(tuple(row) for row in obj["log_prob"]),
            alpha=obj["alpha"],
        )

    @staticmethod
    def loads(text: str) -> "NbModel":
        return NbModel.from_json(json.loads(text))


def nb_train(positive: Corpus, negative: Corpus, alpha: float = 1.0) -> NbModel:
    """Multinomial NB with additive smoothing; class priors fit from the
    corpus sizes."""
    if len(positive) == 0 or len(negative) == 0:
        raise ValueError("both training corpora must be non-empty")
    if alpha <= 0:
        raise ValueError("alpha must be > 0")
    vocab: dict[str, int] = {}
    counts = [[], []]
    for cls, corpus in enumerate((positive, negative)):
        for s in corpus:
            for term in _bag(s.text):
                if term not in vocab:
                    vocab[term] = len(vocab)
                    counts[0].append(0)
                    counts[1].append(0)
                counts[cls][vocab[term]] += 1
    v = len(vocab)
    log_prob = []
    for cls in (0, 1):
        total = sum(counts[cls])
        log_prob.append(
            tuple(math.log((c + alpha) / (total + alpha * v)) for c in counts[cls])
        )
    n = len(positive) + len(negative)
    log_prior = (math.log(len(positive) / n), math.log(len(negative) / n))
    return NbModel(tuple(vocab), log_prior, (log_prob[0], log_prob[1]), alpha)


def nb_classify(model: NbModel, corpus: Corpus, threshold: float = 0.5) -> dict[str, bool]:
    index = model._index()
    return {s.id: model.posterior(s.text, index) >= threshold for s in corpus}


def nb_tune_threshold(
    model: NbModel,
    validation: Corpus,
    category: str,
    grid: Sequence[float] = THRESHOLD_GRID,
) -> float:
    """Threshold from the grid maximizing validation F1 (ties keep the
    smaller threshold)."""
    labels = {s.id: s.label for s in validation}
    if any(l is None for l in labels.values()):
        raise ValueError("threshold tuning needs labeled validation data")
    best_t, best_f1 = grid[0], -1.0
    for t in grid:
        m = score_predictions(nb_classify(model, validation, t), labels, category)
        if m.f1 > best_f1:
            best_t, best_f1 = t, m.f1
    return best_t


def nb_explain(model: NbModel, sentence: Sentence) -> list[tuple[str, str]]:
    """Per-token single-term class posterior, reported as 'strong' above
    0.85 and 'fair' above 0.7; everything else is omitted."""
    index = model._index()
    out = []
    for term in _bag(sentence.text):
        p = model.posterior(term, index)
        if p > 0.85:
            out.append((term, "strong"))
        elif p > 0.7:
            out.append((term, "fair"))
    return out


def sib_classify(
    domain: Corpus,
    partition: Partition,
    validation: Corpus,
    target_label: str,
) -> dict[str, bool]:
    """Clusters whose validation prior of `target_label` strictly exceeds
    the global validation prior predict positive for all their members."""
    for s in validation:
        if s.label is None:
            raise ValueError(f"validation sentence {s.id!r} is unlabeled")
    space = BowSpace()
    domain_vecs = space.vectorize(domain)
    val_vecs = space.vectorize(validation)
    val_clusters = assign_nearest(domain_vecs, partition, domain.ids(), val_vecs)

    n_clusters = max(partition.assignment.values()) + 1
    hits = [0] * n_clusters
    totals = [0] * n_clusters
    for s, c in zip(validation, val_clusters):
        totals[c] += 1
        if s.label == target_label:
            hits[c] += 1
    global_prior = sum(hits) / len(validation)
    positive = {
        c for c in range(n_clusters) if totals[c] and hits[c] / totals[c] > global_prior
    }
    return {s.id: partition.assignment[s.id] in positive for s in domain}


def baseline_metrics(predictions: dict[str, bool], corpus: Corpus, category: str) -> Metrics:
    labels = {s.id: s.label for s in corpus}
    if any(l is None for l in labels.values()):
        raise ValueError("metrics need labeled data")
    return score_predictions(predictions, labels, category)
