"""HTTP API over a loaded rule set and corpus: browse rules, inspect
matches, merge/edit rules, and get live selection metrics against a
labeled validation set. Single session, one analyst; every statistic is
computed by the same core modules the CLI uses.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np
from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .attributes import Attribute, AttributeProvider, AugmentedSentence
from .corpus import load_jsonl
from .evaluation import score_predictions
from .patterns import (
    MatchStats,
    Pattern,
    PatternSyntaxError,
    RuleSet,
    ScoredRule,
    match,
    matches,
    parse_rule,
    render,
)


@dataclass
class Session:
    ruleset: RuleSet                       # working copy; source file never mutated
    foreground: list[AugmentedSentence]
    background: list[AugmentedSentence]
    validation: Optional[list[AugmentedSentence]] = None
    validation_labels: Optional[dict[str, str]] = None
    category: Optional[str] = None
    selection: set[int] = field(default_factory=set)
    undo_log: list[str] = field(default_factory=list)
    _val_rows: dict[tuple, np.ndarray] = field(default_factory=dict)

    @property
    def rules(self) -> list[ScoredRule]:
        return list(self.ruleset.rules)

    def validation_row(self, rule: ScoredRule) -> np.ndarray:
        key = rule.pattern.canonical()
        row = self._val_rows.get(key)
        if row is None:
            w = self.ruleset.params.w
            row = np.array([matches(rule.pattern, s, w) for s in self.validation], dtype=bool)
            self._val_rows[key] = row
        return row

    def recompute_rule(self, pattern: Pattern) -> ScoredRule:
        w = self.ruleset.params.w
        fg_ids = frozenset(
            s.sentence_id for s in self.foreground if matches(pattern, s, w)
        )
        bg_n = sum(1 for s in self.background if matches(pattern, s, w))
        stats = MatchStats(len(fg_ids), len(self.foreground), bg_n, len(self.background))
        return ScoredRule(pattern, self.ruleset.params.scorer_fn()(stats), stats, fg_ids)


def build_session_from_args(args) -> Session:
    from .cli import _provider

    provider = _provider(args)
    ruleset = RuleSet.loads(Path(args.rules).read_text(encoding="utf-8"))
    fg = provider.augment_all(load_jsonl(args.foreground), args.threads)
    bg = provider.augment_all(load_jsonl(args.background), args.threads)
    validation = validation_labels = None
    if args.validation:
        val_corpus = load_jsonl(args.validation)
        validation = provider.augment_all(val_corpus, args.threads)
        validation_labels = {s.id: s.label for s in val_corpus if s.label is not None}
    return Session(
        ruleset=ruleset,
        foreground=fg,
        background=bg,
        validation=validation,
        validation_labels=validation_labels,
        category=args.label,
    )


class MergeBody(BaseModel):
    source_ids: list[int] = []
    slots: Optional[list[list[str]]] = None
    rule_text: Optional[str] = None


class SelectionBody(BaseModel):
    rule_ids: list[int]
    min_matches: int = 1
    category: Optional[str] = None


class ExportBody(BaseModel):
    path: Optional[str] = None


def _rule_view(session: Session, idx: int, rule: ScoredRule) -> dict:
    return {
        "id": idx,
        "text": render(rule.pattern),
        "slots": rule.pattern.to_json_slots(),
        "score": rule.score,
        "stats": rule.stats.to_json(),
        "selected": idx in session.selection,
    }


def _export_ruleset(session: Session) -> RuleSet:
    ordered = sorted(
        session.ruleset.rules, key=lambda r: (-r.score, r.pattern.canonical())
    )
    return RuleSet(tuple(ordered), session.ruleset.params)


def create_app(session: Optional[Session], ui_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="contrastminer rule explorer", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    lock = threading.RLock()

    def need_session() -> Session:
        if session is None:
            raise HTTPException(status_code=503, detail="no session loaded")
        return session

    @app.get("/api/schema")
    def schema():
        return JSONResponse(app.openapi())

    @app.get("/api/rules")
    def list_rules():
        s = need_session()
        with lock:
            views = [_rule_view(s, i, r) for i, r in enumerate(s.rules)]
            views.sort(key=lambda v: (-v["score"], v["slots"]))
            return {
                "rules": views,
                "selection": sorted(s.selection),
                "params": s.ruleset.params.to_json(),
                "foreground_size": len(s.foreground),
                "background_size": len(s.background),
            }

    @app.get("/api/rules/{rule_id}/matches")
    def rule_matches(rule_id: int, limit: int = 50):
        s = need_session()
        with lock:
            if not 0 <= rule_id < len(s.rules):
                raise HTTPException(status_code=404, detail=f"unknown rule id {rule_id}")
            rule = s.rules[rule_id]
            w = s.ruleset.params.w
            out = []
            for sentence in s.foreground:
                if len(out) >= max(limit, 0):
                    break
                m = match(rule.pattern, sentence, w)
                if m is not None:
                    out.append({
                        "id": sentence.sentence_id,
                        "tokens": sentence.surfaces(),
                        "match_indices": m,
                    })
            return {"rule": rule_id, "text": render(rule.pattern), "matches": out}

    @app.post("/api/rules/merge")
    def merge_rules(body: MergeBody):
        s = need_session()
        with lock:
            try:
                if body.rule_text is not None:
                    pattern = parse_rule(body.rule_text)
                elif body.slots:
                    pattern = Pattern(
                        tuple(frozenset(Attribute.parse(a) for a in slot) for slot in body.slots)
                    )
                else:
                    raise ValueError("merge needs 'slots' or 'rule_text'")
            except (ValueError, PatternSyntaxError) as e:
                raise HTTPException(status_code=422, detail=str(e))
            for sid in body.source_ids:
                if not 0 <= sid < len(s.rules):
                    raise HTTPException(status_code=422, detail=f"unknown source rule {sid}")
            s.undo_log.append(s.ruleset.dumps())
            new_rule = s.recompute_rule(pattern)
            s.ruleset = RuleSet(s.ruleset.rules + (new_rule,), s.ruleset.params)
            idx = len(s.rules) - 1
            return _rule_view(s, idx, new_rule)

    @app.post("/api/selection")
    def selection_metrics(body: SelectionBody):
        s = need_session()
        with lock:
            for rid in body.rule_ids:
                if not 0 <= rid < len(s.rules):
                    raise HTTPException(status_code=400, detail=f"unknown rule id {rid}")
            if s.validation is None or s.validation_labels is None:
                raise HTTPException(status_code=400, detail="no labeled validation loaded")
            category = body.category or s.category
            if category is None:
                raise HTTPException(status_code=400, detail="no category specified")
            s.selection = set(body.rule_ids)
            if body.rule_ids:
                counts = np.sum(
                    [s.validation_row(s.rules[rid]) for rid in body.rule_ids], axis=0
                )
            else:
                counts = np.zeros(len(s.validation), dtype=int)
            preds = {
                sent.sentence_id: bool(c >= body.min_matches)
                for sent, c in zip(s.validation, counts)
            }
            metrics = score_predictions(preds, s.validation_labels, category)
            return {
                "selection": sorted(s.selection),
                "min_matches": body.min_matches,
                "category": category,
                "metrics": metrics.to_json(),
            }

    @app.post("/api/export")
    def export_rules(body: ExportBody):
        s = need_session()
        with lock:
            exported = _export_ruleset(s)
            text = exported.dumps() + "\n"
            if body.path:
                try:
                    Path(body.path).parent.mkdir(parents=True, exist_ok=True)
                    Path(body.path).write_text(text, encoding="utf-8")
                except OSError as e:
                    raise HTTPException(status_code=500, detail=f"write failed: {e}")
            return exported.to_json()

    @app.post("/api/undo")
    def undo():
        s = need_session()
        with lock:
            if not s.undo_log:
                raise HTTPException(status_code=409, detail="nothing to undo")
            s.ruleset = RuleSet.loads(s.undo_log.pop())
            s.selection = {i for i in s.selection if i < len(s.rules)}
            return {"rules": len(s.rules)}

    if ui_dir is None:
        default_ui = Path("frontend") / "dist"
        ui_dir = str(default_ui) if default_ui.is_dir() else None
    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    return app
