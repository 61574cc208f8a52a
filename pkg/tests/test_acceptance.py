"""Acceptance suite: every release criterion with its stated tolerance.

Each criterion prints one PASS/FAIL line (visible even under pytest
capture). Run with `pytest tests/test_acceptance.py -v` for the same
information as test outcomes.
"""
import itertools
import json
import random
import sys
import time
from pathlib import Path

import pytest

from contrastminer.attributes import Attribute, AttributeProvider, AugmentedSentence
from contrastminer.background import split_general_english, split_sib
from contrastminer.baselines import (
    baseline_metrics,
    nb_classify,
    nb_train,
    nb_tune_threshold,
    prior_classify,
)
from contrastminer.clustering import (
    BowVector,
    SibParams,
    exhaustive_best_bipartition,
    sib_cluster,
)
from contrastminer.corpus import Token, load_jsonl
from contrastminer.demo_data import news_demo, sms_demo
from contrastminer.evaluation import sweep
from contrastminer.patterns import (
    GraspParams,
    MatchStats,
    Pattern,
    match,
    run_grasp,
    score_f_beta,
    score_info_gain,
)

from grasp_fixture import FIXTURE_PARAMS, build_contrast
from oracles import brute_force_match, direct_f_beta, direct_info_gain, exhaustive_grasp


def report(name: str, ok: bool, detail: str = "") -> None:
    line = f"[ACCEPTANCE] {name}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    sys.__stdout__.write(line + "\n")
    sys.__stdout__.flush()
    assert ok, line


def make_augmented(sid, attr_lists):
    tokens = tuple(Token(f"t{i}", i) for i in range(len(attr_lists)))
    attrs = tuple(frozenset(Attribute.parse(a) for a in lst) for lst in attr_lists)
    return AugmentedSentence(sid, tokens, attrs)


class TestMatcherOracle:
    def test_matcher_oracle_equivalence(self):
        universe = (
            [f"TEXT:w{i}" for i in range(5)]
            + ["POS:NN", "POS:VB", "POS:RB"]
            + ["HYPERNYM:h1", "HYPERNYM:h2", "SUPERCLASS:c1", "SENTIMENT:positive"]
        )
        rng = random.Random(20240813)
        start = time.time()
        checked = 0
        while checked < 10_000:
            n_tokens = rng.randint(0, 12)
            sentence = make_augmented(
                "s",
                [rng.sample(universe, rng.randint(1, 4)) for _ in range(n_tokens)],
            )
            slots = [
                [Attribute.parse(a) for a in rng.sample(universe, rng.randint(1, 2))]
                for _ in range(rng.randint(1, 3))
            ]
            try:
                pattern = Pattern.of(*slots)
            except ValueError:
                continue  # drew an invalid slot; not a test case
            w = rng.randint(1, 6)
            assert match(pattern, sentence, w) == brute_force_match(pattern, sentence, w)
            checked += 1
        elapsed = time.time() - start
        report(
            "matcher oracle equivalence (10,000 cases)",
            elapsed < 10.0,
            f"{elapsed:.1f}s",
        )


class TestScoringOracles:
    def test_scoring_oracles(self):
        rng = random.Random(77)
        worst_ig = worst_fb = 0.0
        for _ in range(1000):
            nf, nb = rng.randint(1, 200), rng.randint(1, 200)
            stats = MatchStats(rng.randint(0, nf), nf, rng.randint(0, nb), nb)
            worst_ig = max(worst_ig, abs(score_info_gain(stats) - direct_info_gain(stats)))
            beta = rng.choice([0.05, 0.1, 0.5, 1.0, 2.0])
            worst_fb = max(
                worst_fb, abs(score_f_beta(stats, beta) - direct_f_beta(stats, beta))
            )
        report(
            "scoring oracles (1,000 contingencies, 1e-12)",
            worst_ig <= 1e-12 and worst_fb <= 1e-12,
            f"max |d| ig={worst_ig:.2e} fb={worst_fb:.2e}",
        )

    def test_tiny_beta_ranking_equals_precision(self):
        rng = random.Random(5)
        table = []
        seen = set()
        while len(table) < 50:
            stats = MatchStats(rng.randint(1, 40), 40, rng.randint(0, 40), 40)
            p = round(stats.fg_matched / (stats.fg_matched + stats.bg_matched), 9)
            if p in seen:
                continue
            seen.add(p)
            table.append(stats)
        by_f = sorted(range(50), key=lambda i: -score_f_beta(table[i], 0.001))
        by_p = sorted(
            range(50),
            key=lambda i: -table[i].fg_matched
            / (table[i].fg_matched + table[i].bg_matched),
        )
        report("F_beta(0.001) ranking equals precision ranking (50 rules)", by_f == by_p)


class TestExhaustiveEquivalence:
    def test_exhaustive_search_equivalence(self):
        contrast = build_contrast()
        got = run_grasp(contrast, FIXTURE_PARAMS)
        want = exhaustive_grasp(contrast.foreground, contrast.background, FIXTURE_PARAMS)
        report(
            "exhaustive-search equivalence (30-sentence fixture, exact JSON)",
            got.to_json() == want.to_json(),
        )


class TestPlantedRecovery:
    def test_planted_pattern_recovery(self):
        rng = random.Random(424242)
        fillers = [f"TEXT:n{i}" for i in range(40)]
        pos_tags = [f"POS:{t}" for t in ("NN", "VB", "DT", "JJ", "RB", "IN")]

        def filler_token():
            return [rng.choice(fillers), rng.choice(pos_tags)]

        def make_sentence(sid, planted):
            length = rng.randint(8, 13)
            tokens = [filler_token() for _ in range(length)]
            if planted:
                i = rng.randint(0, length - 5)
                gap = rng.randint(1, 3)
                tokens[i] = tokens[i] + ["HYPERNYM:signal_head"]
                tokens[i + gap] = tokens[i + gap] + ["SUPERCLASS:signal.tail"]
            else:
                # components may appear alone, never both in one sentence
                roll = rng.random()
                if roll < 0.035:
                    tokens[rng.randrange(length)] += ["HYPERNYM:signal_head"]
                elif roll < 0.07:
                    tokens[rng.randrange(length)] += ["SUPERCLASS:signal.tail"]
            return make_augmented(sid, tokens)

        class Contrast:
            foreground = [make_sentence(f"f{i}", True) for i in range(1000)]
            background = [make_sentence(f"b{i}", False) for i in range(1000)]

        start = time.time()
        ruleset = run_grasp(Contrast(), GraspParams(scorer="f_beta", beta=0.1, seed=13))
        elapsed = time.time() - start
        top5 = ruleset.rules[:5]
        hit = any(
            r.stats.fg_matched >= 950 and r.stats.bg_matched <= 50 for r in top5
        )
        report(
            "planted-pattern recovery (top-5, >=95% fg, <=5% bg)",
            hit and elapsed < 120,
            f"{elapsed:.1f}s",
        )


class TestSibProperties:
    def test_sib_objective_and_exhaustive_maximum(self):
        all_ok = True
        for seed in range(20):
            rng = random.Random(1000 + seed)
            vecs = []
            for _ in range(6):
                counts = {}
                for _ in range(12):
                    t = rng.randrange(8)
                    counts[t] = counts.get(t, 0) + 1
                vecs.append(BowVector(counts, sum(counts.values())))
            part = sib_cluster(
                vecs, SibParams(n_clusters=2, seed=seed), check_invariants=True
            )
            best = exhaustive_best_bipartition(vecs)
            if abs(part.objective - best) > 1e-9:
                all_ok = False
        report(
            "sIB: per-step monotone objective + exhaustive max on 20 toy sets",
            all_ok,
        )


@pytest.fixture(scope="module")
def sms_data():
    data = sms_demo(13)
    data["news"] = news_demo(13, 5000)
    return data


@pytest.fixture(scope="module")
def sms_pipeline(sms_data):
    """Full regression pipeline; shared across the end-to-end criteria."""
    start = time.time()
    provider = AttributeProvider()
    train, val, test = sms_data["train"], sms_data["validation"], sms_data["test"]
    val_aug = provider.augment_all(val)
    test_aug = provider.augment_all(test)
    betas = (0.5, 0.1, 0.05)

    reports = {}
    for method in ("split", "ge"):
        if method == "split":
            raw = split_sib(train, val, "spam", SibParams(n_clusters=10, seed=13))
        else:
            raw = split_general_english(train, sms_data["news"], 50_000, seed=13)
        contrast = raw.augment(provider)
        rulesets = {
            beta: run_grasp(contrast, GraspParams(scorer="f_beta", beta=beta, seed=13))
            for beta in betas
        }
        reports[method] = sweep(
            rulesets, val_aug, val.labels(), test_aug, test.labels(),
            category="spam", dataset="sms",
        )

    nb_model = nb_train(train, sms_data["news"])
    threshold = nb_tune_threshold(nb_model, val, "spam")
    return {
        "split": reports["split"],
        "ge": reports["ge"],
        "prior": baseline_metrics(prior_classify(test), test, "spam"),
        "nb": baseline_metrics(nb_classify(nb_model, test, threshold), test, "spam"),
        "elapsed": time.time() - start,
    }


class TestPriorBaseline:
    def test_prior_reproduction(self, sms_data):
        test = sms_data["test"]
        m = baseline_metrics(prior_classify(test), test, "spam")
        ok = (
            abs(100 * m.precision - 13) <= 1
            and m.recall == 1.0
            and abs(100 * m.f1 - 23) <= 1
        )
        report("prior baseline on sms test (13 100 23, +/-1)", ok, m.row())


class TestEndToEndRegression:
    def test_split_regression(self, sms_pipeline):
        split_f1 = sms_pipeline["split"].test.f1
        ok = (
            split_f1 >= 0.55
            and split_f1 > sms_pipeline["prior"].f1
            and split_f1 > sms_pipeline["nb"].f1
        )
        report(
            "end-to-end split regression (F1 >= 0.55, beats prior and nb)",
            ok,
            f"split={split_f1:.2f} prior={sms_pipeline['prior'].f1:.2f} "
            f"nb={sms_pipeline['nb'].f1:.2f}",
        )

    def test_ge_beats_prior(self, sms_pipeline):
        ge_f1 = sms_pipeline["ge"].test.f1
        report(
            "end-to-end general-english regression (beats prior F1)",
            ge_f1 > sms_pipeline["prior"].f1,
            f"ge={ge_f1:.2f}",
        )

    def test_pipeline_runtime(self, sms_pipeline):
        report(
            "total pipeline runtime < 15 min",
            sms_pipeline["elapsed"] < 900,
            f"{sms_pipeline['elapsed']:.0f}s",
        )


class TestCliDeterminism:
    def run_all_commands(self, base: Path, threads: int, tag: str) -> dict[str, bytes]:
        from contrastminer.cli import main as cli_main
        from contrastminer.corpus import save_jsonl
        from contrastminer.demo_data import _mixed_corpus
        from contrastminer.corpus import _StableRandom

        out = base / tag
        out.mkdir(parents=True, exist_ok=True)
        rng = _StableRandom(99)
        counter = [0]
        domain = _mixed_corpus(rng, 160, 40, counter, "d", "mini")
        general = news_demo(7, 150)
        val = _mixed_corpus(rng, 40, 10, counter, "v", "mini-val")
        save_jsonl(domain, out / "domain.jsonl")
        save_jsonl(general, out / "general.jsonl")
        save_jsonl(val, out / "val.jsonl")
        t = str(threads)

        def cli(*args):
            assert cli_main(list(args)) == 0

        cli("split", "--method", "sib", "--domain", str(out / "domain.jsonl"),
            "--validation", str(out / "val.jsonl"), "--target-label", "spam",
            "--clusters", "4", "--out-fg", str(out / "fg.jsonl"),
            "--out-bg", str(out / "bg.jsonl"), "--seed", "13", "--threads", t)
        cli("discover", "--foreground", str(out / "fg.jsonl"),
            "--background", str(out / "bg.jsonl"), "-o", str(out / "rules.json"),
            "--k1", "300", "--k2", "30", "--max-len", "3", "--t1", "0.02",
            "--beta", "0.1", "--seed", "13", "--threads", t)
        cli("evaluate", "--rules", str(out / "rules.json"),
            "--validation", str(out / "val.jsonl"), "--test", str(out / "domain.jsonl"),
            "--label", "spam", "-o", str(out / "report.json"),
            "--seed", "13", "--threads", t)
        cli("match", "--rules", str(out / "rules.json"),
            "--corpus", str(out / "val.jsonl"), "-o", str(out / "matches.jsonl"),
            "--seed", "13", "--threads", t)
        cli("baseline", "--method", "nb", "--test", str(out / "domain.jsonl"),
            "--domain", str(out / "domain.jsonl"), "--general", str(out / "general.jsonl"),
            "--validation", str(out / "val.jsonl"), "--label", "spam",
            "-o", str(out / "nb.json"), "--seed", "13", "--threads", t)
        cli("baseline", "--method", "prior", "--test", str(out / "domain.jsonl"),
            "--label", "spam", "-o", str(out / "prior.json"),
            "--seed", "13", "--threads", t)
        cli("baseline", "--method", "sib", "--test", str(out / "domain.jsonl"),
            "--validation", str(out / "val.jsonl"), "--label", "spam",
            "--clusters", "4", "-o", str(out / "sib.json"),
            "--seed", "13", "--threads", t)
        names = ["fg.jsonl", "bg.jsonl", "fg.provenance.json", "rules.json",
                 "report.json", "matches.jsonl", "nb.json", "prior.json", "sib.json"]
        return {n: (out / n).read_bytes() for n in names}

    def test_byte_identical_across_seeds_and_threads(self, tmp_path):
        one = self.run_all_commands(tmp_path, threads=1, tag="t1")
        eight = self.run_all_commands(tmp_path, threads=8, tag="t8")
        again = self.run_all_commands(tmp_path, threads=1, tag="t1b")
        same = all(one[n] == eight[n] for n in one) and all(
            one[n] == again[n] for n in one
        )
        report("CLI determinism (threads 1 vs 8, rerun, byte-identical)", same)


class TestLabelIsolation:
    def test_rules_invariant_under_label_changes(self, tmp_path):
        from contrastminer.cli import main as cli_main
        from contrastminer.corpus import _StableRandom, save_jsonl, Corpus, Sentence
        from contrastminer.demo_data import _mixed_corpus

        rng = _StableRandom(55)
        counter = [0]
        fg = _mixed_corpus(rng, 80, 40, counter, "f", "fg")
        bg = _mixed_corpus(rng, 80, 10, counter, "b", "bg")

        def variant(corpus, mode, seed):
            if mode == "drop":
                sents = [Sentence(s.id, s.text, label=None) for s in corpus]
            else:
                labels = [s.label for s in corpus]
                r = _StableRandom(seed)
                r.shuffle(labels)
                sents = [
                    Sentence(s.id, s.text, label=l) for s, l in zip(corpus, labels)
                ]
            return Corpus(tuple(sents), corpus.name)

        outputs = []
        for i, mode in enumerate(("orig", "drop", "perm", "perm2")):
            d = tmp_path / mode
            d.mkdir()
            fgv = fg if mode == "orig" else variant(fg, mode if mode == "drop" else "perm", i)
            bgv = bg if mode == "orig" else variant(bg, mode if mode == "drop" else "perm", i + 10)
            save_jsonl(fgv, d / "fg.jsonl")
            save_jsonl(bgv, d / "bg.jsonl")
            code = cli_main([
                "discover", "--foreground", str(d / "fg.jsonl"),
                "--background", str(d / "bg.jsonl"), "-o", str(d / "rules.json"),
                "--k1", "200", "--k2", "20", "--max-len", "2", "--t1", "0.02",
                "--seed", "13",
            ])
            assert code == 0
            outputs.append((d / "rules.json").read_bytes())
        report(
            "label isolation (rules invariant under label permutation/removal)",
            all(o == outputs[0] for o in outputs),
        )
