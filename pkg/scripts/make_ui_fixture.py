#!/usr/bin/env python3
"""Regenerate frontend/tests/fixture.json: real API payloads captured from
a fixture session (demo SMS corpus, cluster split, beta=0.1 rule set)
plus the expected values the UI must display. Every number the frontend
tests assert against originates here, from the same core modules the CLI
uses.

Run from the repo root: python scripts/make_ui_fixture.py
"""
from __future__ import annotations

import json
import sys
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from contrastminer.attributes import AttributeProvider
from contrastminer.background import split_sib
from contrastminer.clustering import SibParams
from contrastminer.cli import main as cli_main
from contrastminer.corpus import save_jsonl
from contrastminer.demo_data import sms_demo
from contrastminer.evaluation import (
    build_match_matrix,
    classify_by_rules,
    rank_rules,
    score_predictions,
)
from contrastminer.patterns import GraspParams, Pattern, RuleSet, ScoredRule, run_grasp
from contrastminer.service import Session, create_app


def main() -> int:
    data = sms_demo(13)
    train, val = data["train"], data["validation"]
    provider = AttributeProvider()
    split = split_sib(train, val, "spam", SibParams(n_clusters=10, seed=13))
    contrast = split.augment(provider)
    ruleset = run_grasp(contrast, GraspParams(scorer="f_beta", beta=0.1, seed=13))
    assert len(ruleset.rules) == 100

    val_aug = provider.augment_all(val)
    val_labels = {s.id: s.label for s in val}
    session = Session(
        ruleset=ruleset,
        foreground=contrast.foreground,
        background=contrast.background,
        validation=val_aug,
        validation_labels=val_labels,
        category="spam",
    )
    client = TestClient(create_app(session))

    rules_payload = client.get("/api/rules").json()

    # expected F1 for the top-10-by-information-gain cell at x=1, computed
    # by the evaluation module (the number the UI must display)
    matrix = build_match_matrix(ruleset, val_aug)
    top10 = rank_rules(matrix, val_labels, "spam")[:10]
    preds = classify_by_rules(matrix, top10, 1)
    expected = score_predictions(preds, val_labels, "spam")
    selection_payload = client.post(
        "/api/selection", json={"rule_ids": top10, "min_matches": 1}
    ).json()
    assert abs(selection_payload["metrics"]["f1"] - expected.f1) < 1e-12

    # merge two slots taken from existing fixture rules; pick a donor pair
    # whose composition actually matches something, so the count displayed
    # by the UI is a meaningful cross-check
    from contrastminer.patterns import matches as pattern_matches

    def fg_count(pattern: Pattern) -> int:
        w = ruleset.params.w
        return sum(1 for s in contrast.foreground if pattern_matches(pattern, s, w))

    a_idx = b_idx = -1
    merged_slots: list[list[str]] = []
    existing = {r.pattern.canonical() for r in ruleset.rules}
    for i, donor_a in enumerate(ruleset.rules):
        for j, donor_b in enumerate(ruleset.rules):
            if i == j:
                continue
            candidate = Pattern(
                (donor_a.pattern.slots[0], donor_b.pattern.slots[0])
            )
            if candidate.canonical() in existing:
                continue
            if fg_count(candidate) >= 5:
                a_idx, b_idx = i, j
                merged_slots = [list(s) for s in candidate.canonical()]
                break
        if merged_slots:
            break
    assert merged_slots, "no productive donor pair found"
    merge_payload = client.post(
        "/api/rules/merge", json={"source_ids": [a_idx, b_idx], "slots": merged_slots}
    ).json()

    # cross-check the displayed match count against the match command
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        merged_pattern = Pattern.from_json_slots(merged_slots)
        single = RuleSet(
            (ScoredRule(merged_pattern, 0.0, ruleset.rules[0].stats),), ruleset.params
        )
        (tmp / "merged.json").write_text(single.dumps(), encoding="utf-8")
        save_jsonl(split.foreground, tmp / "fg.jsonl")
        code = cli_main([
            "match", "--rules", str(tmp / "merged.json"),
            "--corpus", str(tmp / "fg.jsonl"), "-o", str(tmp / "m.jsonl"),
        ])
        assert code == 0
        text = (tmp / "m.jsonl").read_text(encoding="utf-8")
        cmd_match_count = sum(1 for line in text.splitlines() if line.strip())
    assert merge_payload["stats"]["fg_matched"] == cmd_match_count
    client.post("/api/undo")

    preview_rule = 0
    matches_page1 = client.get(f"/api/rules/{preview_rule}/matches?limit=20").json()
    matches_page2 = client.get(f"/api/rules/{preview_rule}/matches?limit=40").json()
    no_match_rule = next(
        (i for i, r in enumerate(ruleset.rules) if r.stats.fg_matched == 0), None
    )

    fixture = {
        "rules_payload": rules_payload,
        "top10_by_ig": top10,
        "expected_top10_x1": expected.to_json(),
        "selection_payload": selection_payload,
        "merge_request": {"source_ids": [a_idx, b_idx], "slots": merged_slots},
        "merge_payload": merge_payload,
        "cmd_match_count": cmd_match_count,
        "matches_page1": matches_page1,
        "matches_page2": matches_page2,
        "no_match_rule": no_match_rule,
    }
    out = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixture.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(fixture, indent=1, sort_keys=True), encoding="utf-8")
    print(f"wrote {out} ({out.stat().st_size // 1024} KiB)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
