"""Expert-simulation evaluation: correlate discovered rules with category
labels on a validation set, pick the top-k rules, classify by a minimum
match count, sweep the (beta, top_k, min_matches) grid, and report P/R/F1
on held-out test data under the best validation configuration.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

from .attributes import AugmentedSentence
from .patterns import MatchStats, RuleSet, matches, score_info_gain

logger = logging.getLogger(__name__)

TOP_K_GRID = (100, 50, 25, 10)
MIN_MATCHES_GRID = (10, 5, 2, 1)


@dataclass(frozen=True)
class Metrics:
    precision: float
    recall: float
    f1: float

    @staticmethod
    def from_counts(tp: int, fp: int, fn: int) -> "Metrics":
        p = tp / (tp + fp) if tp + fp else 0.0
        r = tp / (tp + fn) if tp + fn else 0.0
        f1 = 2 * p * r / (p + r) if p + r else 0.0
        return Metrics(p, r, f1)

    def to_json(self) -> dict:
        return {"precision": self.precision, "recall": self.recall, "f1": self.f1}

    def row(self) -> str:
        return f"{100 * self.precision:.0f} {100 * self.recall:.0f} {100 * self.f1:.0f}"


def score_predictions(
    predictions: Mapping[str, bool], labels: Mapping[str, str], category: str
) -> Metrics:
    tp = fp = fn = 0
    for sid, label in labels.items():
        predicted = predictions.get(sid, False)
        actual = label == category
        if predicted and actual:
            tp += 1
        elif predicted and not actual:
            fp += 1
        elif actual:
            fn += 1
    return Metrics.from_counts(tp, fp, fn)


@dataclass(frozen=True)
class MatchMatrix:
    """Boolean rule x sentence matrix."""

    matrix: np.ndarray  # (n_rules, n_sentences), bool
    sentence_ids: tuple[str, ...]

    def __post_init__(self):
        if self.matrix.shape[1] != len(self.sentence_ids):
            raise ValueError("matrix columns must align with sentence ids")

    @property
    def n_rules(self) -> int:
        return self.matrix.shape[0]


def build_match_matrix(
    ruleset: RuleSet,
    sentences: Sequence[AugmentedSentence],
    threads: int = 1,
) -> MatchMatrix:
    w = ruleset.params.w
    mat = np.zeros((len(ruleset.rules), len(sentences)), dtype=bool)

    def fill(j: int) -> None:
        s = sentences[j]
        for i, rule in enumerate(ruleset.rules):
            if matches(rule.pattern, s, w):
                mat[i, j] = True

    if threads > 1 and len(sentences) >= 64:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(fill, range(len(sentences))))
    else:
        for j in range(len(sentences)):
            fill(j)
    return MatchMatrix(mat, tuple(s.sentence_id for s in sentences))


def rank_rules(
    matrix: MatchMatrix,
    labels: Mapping[str, str],
    category: str,
) -> list[int]:
    """Rule indices sorted by information gain between the rule's match
    indicator and the one-vs-rest category indicator, descending; ties keep
    the original rule-set order."""
    y = np.array([labels[sid] == category for sid in matrix.sentence_ids])
    if not y.any():
        raise ValueError(f"category {category!r} absent from the validation labels")
    n_f = int(y.sum())
    n_b = len(y) - n_f
    gains = []
    for i in range(matrix.n_rules):
        row = matrix.matrix[i]
        stats = MatchStats(int((row & y).sum()), n_f, int((row & ~y).sum()), n_b)
        gains.append(score_info_gain(stats))
    return sorted(range(matrix.n_rules), key=lambda i: (-gains[i], i))


def classify_by_rules(
    matrix: MatchMatrix,
    selected_rules: Sequence[int],
    min_matches: int,
) -> dict[str, bool]:
    """A sentence is positive iff at least `min_matches` selected rules
    match it."""
    if min_matches > len(selected_rules):
        logger.warning(
            "min_matches=%d exceeds the %d selected rules; nothing can be positive",
            min_matches,
            len(selected_rules),
        )
    if selected_rules:
        counts = matrix.matrix[list(selected_rules)].sum(axis=0)
    else:
        counts = np.zeros(len(matrix.sentence_ids), dtype=int)
    return {
        sid: bool(counts[j] >= min_matches) for j, sid in enumerate(matrix.sentence_ids)
    }


@dataclass(frozen=True)
class EvalConfig:
    beta: float
    top_k: int
    min_matches: int

    def to_json(self) -> dict:
        return {"beta": self.beta, "top_k": self.top_k, "min_matches": self.min_matches}


@dataclass(frozen=True)
class EvalReport:
    category: str
    dataset: str
    grid: tuple[tuple[EvalConfig, Metrics], ...]  # validation metrics per config
    best: EvalConfig
    validation: Metrics
    test: Metrics

    def to_json(self) -> dict:
        return {
            "category": self.category,
            "dataset": self.dataset,
            "grid": [
                {**cfg.to_json(), "validation": m.to_json()} for cfg, m in self.grid
            ],
            "best": self.best.to_json(),
            "validation": self.validation.to_json(),
            "test": self.test.to_json(),
        }


def _labels_of(sentences: Sequence, labels: Sequence[Optional[str]]) -> dict[str, str]:
    out = {}
    for s, lab in zip(sentences, labels):
        if lab is None:
            raise ValueError(f"sentence {s.sentence_id!r} is unlabeled")
        out[s.sentence_id] = lab
    return out


def sweep(
    rulesets: Mapping[float, RuleSet],
    validation: Sequence[AugmentedSentence],
    validation_labels: Sequence[Optional[str]],
    test: Sequence[AugmentedSentence],
    test_labels: Sequence[Optional[str]],
    category: str,
    dataset: str = "",
    top_k_grid: Sequence[int] = TOP_K_GRID,
    min_matches_grid: Sequence[int] = MIN_MATCHES_GRID,
    threads: int = 1,
) -> EvalReport:
    """Full expert-simulation sweep. For every (beta, top_k, min_matches)
    cell: rank that beta's rules by validation information gain, select the
    top_k, classify validation, and score. The best validation-F1 cell
    (ties: smaller top_k, then larger min_matches, then larger beta) is then
    applied once to the test set."""
    if not rulesets:
        raise ValueError("sweep needs at least one rule set")
    val_labels = _labels_of(validation, validation_labels)
    tst_labels = _labels_of(test, test_labels)

    grid: list[tuple[EvalConfig, Metrics]] = []
    picks: dict[tuple[float, int], list[int]] = {}
    val_matrices: dict[float, MatchMatrix] = {}
    for beta in sorted(rulesets):
        ruleset = rulesets[beta]
        matrix = build_match_matrix(ruleset, validation, threads)
        val_matrices[beta] = matrix
        ranked = rank_rules(matrix, val_labels, category)
        for top_k in top_k_grid:
            selected = ranked[:top_k]
            picks[(beta, top_k)] = selected
            for x in min_matches_grid:
                preds = classify_by_rules(matrix, selected, x)
                metrics = score_predictions(preds, val_labels, category)
                grid.append((EvalConfig(beta, top_k, x), metrics))

    def pick_key(item: tuple[EvalConfig, Metrics]):
        cfg, m = item
        return (-m.f1, cfg.top_k, -cfg.min_matches, -cfg.beta)

    best_cfg, best_val = min(grid, key=pick_key)

    test_matrix = build_match_matrix(rulesets[best_cfg.beta], test, threads)
    test_preds = classify_by_rules(
        test_matrix, picks[(best_cfg.beta, best_cfg.top_k)], best_cfg.min_matches
    )
    test_metrics = score_predictions(test_preds, tst_labels, category)
    return EvalReport(
        category=category,
        dataset=dataset,
        grid=tuple(grid),
        best=best_cfg,
        validation=best_val,
        test=test_metrics,
    )
