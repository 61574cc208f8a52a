"""Unsupervised contrast-based rule induction over annotated token
sequences: mine human-readable attribute patterns that are common in a
foreground corpus and rare in a background corpus."""

__version__ = "0.1.0"

from .attributes import Attribute, AttributeProvider, AttributeProviderConfig, AugmentedSentence
from .corpus import Corpus, Sentence, Token, load_jsonl, save_jsonl, tokenize
from .patterns import (
    GraspParams,
    MatchStats,
    Pattern,
    RuleSet,
    ScoredRule,
    match,
    parse_rule,
    render,
    run_grasp,
    score_f_beta,
    score_info_gain,
)

__all__ = [
    "Attribute",
    "AttributeProvider",
    "AttributeProviderConfig",
    "AugmentedSentence",
    "Corpus",
    "GraspParams",
    "MatchStats",
    "Pattern",
    "RuleSet",
    "ScoredRule",
    "Sentence",
    "Token",
    "__version__",
    "load_jsonl",
    "match",
    "parse_rule",
    "render",
    "run_grasp",
    "save_jsonl",
    "score_f_beta",
    "score_info_gain",
    "tokenize",
]
