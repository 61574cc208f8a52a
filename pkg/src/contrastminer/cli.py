"""Command-line interface wiring the pipeline end to end.

Subcommands: discover, split, evaluate, match, baseline, serve. Every
command is deterministic for a fixed --seed (and identical across
--threads settings). Exit codes: 0 success, 1 usage or domain error,
2 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .attributes import AttributeProvider, AttributeProviderConfig
from .background import (
    DEFAULT_N_BACKGROUND,
    split_general_english,
    split_halves,
    split_sib,
)
from .baselines import (
    baseline_metrics,
    nb_classify,
    nb_train,
    nb_tune_threshold,
    prior_classify,
    sib_classify,
)
from .clustering import SibParams, sib_cluster, vectorize
from .corpus import Corpus, CorpusFormatError, load_jsonl, save_jsonl
from .evaluation import (
    MIN_MATCHES_GRID,
    TOP_K_GRID,
    build_match_matrix,
    sweep,
)
from .patterns import GraspParams, RuleSet, match, render, run_grasp


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_resource_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("attribute resources")
    g.add_argument("--wordnet-dir", default=None,
                   help="WordNet database directory (default: bundled mini database)")
    g.add_argument("--sentiment-pos", default=None,
                   help="positive word list, one word per line (default: bundled)")
    g.add_argument("--sentiment-neg", default=None,
                   help="negative word list (default: bundled)")
    g.add_argument("--pos-lexicon", default=None,
                   help="word<TAB>tag lexicon for the POS tagger (default: bundled)")
    g.add_argument("--gazetteer", default=None,
                   help="optional name<TAB>type gazetteer for NER (default: none)")
    g.add_argument("--pos-model", choices=("lexicon", "none"), default="lexicon",
                   help="POS tagging mode (default: lexicon)")
    g.add_argument("--hypernym-depth", type=int, default=5,
                   help="max hypernym ancestor distance to record (default: 5)")


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=13, help="random seed (default: 13)")
    p.add_argument("--threads", type=int, default=1,
                   help="worker threads; results are identical for any value (default: 1)")
    p.add_argument("--config", default=None,
                   help="key=value config file, merged between defaults and flags")


def _provider(args) -> AttributeProvider:
    kwargs = {}
    if args.wordnet_dir:
        kwargs["wordnet_dir"] = Path(args.wordnet_dir)
    if args.sentiment_pos:
        kwargs["sentiment_pos_path"] = Path(args.sentiment_pos)
    if args.sentiment_neg:
        kwargs["sentiment_neg_path"] = Path(args.sentiment_neg)
    if args.pos_lexicon:
        kwargs["pos_lexicon_path"] = Path(args.pos_lexicon)
    if args.gazetteer:
        kwargs["gazetteer_path"] = Path(args.gazetteer)
    config = AttributeProviderConfig(
        pos_model=args.pos_model, hypernym_depth=args.hypernym_depth, **kwargs
    )
    return AttributeProvider(config)


def _write_text(path: str | Path, text: str) -> None:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    with open(p, "w", encoding="utf-8") as fh:
        fh.write(text)


def _write_json(path: str | Path, obj) -> None:
    _write_text(path, json.dumps(obj, sort_keys=True, indent=1, ensure_ascii=False) + "\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="contrastminer",
                     description="Contrast-based rule induction over annotated token sequences.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("discover", help="mine rules from a foreground/background pair",
                       formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    p.add_argument("--foreground", required=True, help="foreground JSONL corpus")
    p.add_argument("--background", required=True, help="background JSONL corpus")
    p.add_argument("-o", "--output", required=True, help="output rules JSON path")
    p.add_argument("--k1", type=int, default=1000, help="alphabet size")
    p.add_argument("--k2", type=int, default=100, help="number of rules to learn")
    p.add_argument("--max-len", type=int, default=5, help="max attributes per rule")
    p.add_argument("--t1", type=float, default=0.005, help="min attribute document frequency")
    p.add_argument("--t2", type=float, default=0.5, help="rule correlation threshold")
    p.add_argument("--window", type=int, default=5, help="match window size")
    p.add_argument("--scorer", choices=("f_beta", "info_gain"), default="f_beta",
                   help="rule scoring function")
    p.add_argument("--beta", type=float, default=0.1, help="beta for the f_beta scorer")
    p.add_argument("--top-print", type=int, default=10, help="rendered rules to print")
    _add_resource_flags(p)
    _add_common_flags(p)

    p = sub.add_parser("split", help="build a foreground/background contrast pair",
                       formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    p.add_argument("--method", choices=("ge", "sib", "halves"), required=True,
                   help="background construction method")
    p.add_argument("--domain", required=True, help="domain JSONL corpus")
    p.add_argument("--out-fg", required=True, help="foreground JSONL output path")
    p.add_argument("--out-bg", required=True, help="background JSONL output path")
    p.add_argument("--general", default=None, help="general-English JSONL corpus (ge)")
    p.add_argument("--n-background", type=int, default=DEFAULT_N_BACKGROUND,
                   help="background sample size (ge)")
    p.add_argument("--validation", default=None, help="labeled validation JSONL (sib)")
    p.add_argument("--target-label", default=None, help="category of interest (sib)")
    p.add_argument("--clusters", type=int, default=10, help="cluster count (sib)")
    p.add_argument("--restarts", type=int, default=10, help="clustering restarts (sib)")
    _add_common_flags(p)

    p = sub.add_parser("evaluate", help="expert-simulation sweep over discovered rules",
                       formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    p.add_argument("--rules", action="append", default=None, required=True,
                   help="rules JSON path; repeat for multiple beta values")
    p.add_argument("--validation", required=True, help="labeled validation JSONL")
    p.add_argument("--test", required=True, help="labeled test JSONL")
    p.add_argument("--label", required=True, help="target category")
    p.add_argument("-o", "--output", required=True, help="output report JSON path")
    p.add_argument("--dataset", default="", help="dataset name recorded in the report")
    p.add_argument("--method-name", default="rules", help="row label when printing")
    p.add_argument("--top-k-grid", default=",".join(map(str, TOP_K_GRID)),
                   help="comma-separated top-k grid")
    p.add_argument("--min-matches-grid", default=",".join(map(str, MIN_MATCHES_GRID)),
                   help="comma-separated min-matches grid")
    p.add_argument("--grid-csv", default=None, help="optional CSV dump of the full grid")
    _add_resource_flags(p)
    _add_common_flags(p)

    p = sub.add_parser("match", help="list rule matches with token indices",
                       formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    p.add_argument("--rules", required=True, help="rules JSON path")
    p.add_argument("--corpus", required=True, help="JSONL corpus to match against")
    p.add_argument("-o", "--output", required=True, help="output matches JSONL path")
    p.add_argument("--rule", type=int, default=None, help="only this rule index")
    _add_resource_flags(p)
    _add_common_flags(p)

    p = sub.add_parser("baseline", help="run a comparison system",
                       formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    p.add_argument("--method", choices=("prior", "nb", "sib"), required=True,
                   help="baseline method")
    p.add_argument("--test", required=True, help="labeled test JSONL")
    p.add_argument("--label", required=True, help="target category")
    p.add_argument("-o", "--output", required=True, help="output report JSON path")
    p.add_argument("--domain", default=None, help="domain JSONL (nb positive side / sib)")
    p.add_argument("--general", default=None, help="general-English JSONL (nb negative side)")
    p.add_argument("--validation", default=None, help="labeled validation JSONL (nb, sib)")
    p.add_argument("--alpha", type=float, default=1.0, help="NB smoothing")
    p.add_argument("--clusters", type=int, default=10, help="cluster count (sib)")
    p.add_argument("--restarts", type=int, default=10, help="clustering restarts (sib)")
    _add_common_flags(p)

    p = sub.add_parser("serve", help="start the rule-explorer HTTP service",
                       formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    p.add_argument("--rules", required=True, help="rules JSON path")
    p.add_argument("--foreground", required=True, help="foreground JSONL corpus")
    p.add_argument("--background", required=True, help="background JSONL corpus")
    p.add_argument("--validation", default=None, help="labeled validation JSONL")
    p.add_argument("--label", default=None, help="category for selection metrics")
    p.add_argument("--port", type=int, default=8000, help="listen port")
    p.add_argument("--host", default="127.0.0.1", help="listen address")
    p.add_argument("--ui-dir", default=None,
                   help="static frontend directory (default: frontend/dist if present)")
    _add_resource_flags(p)
    _add_common_flags(p)
    return parser


def _apply_config(args: argparse.Namespace, argv: list[str]) -> None:
    """Merge a key=value config file under explicit flags:
    defaults < config file < command line."""
    if not getattr(args, "config", None):
        return
    explicit = set()
    for token in argv:
        if token.startswith("--"):
            explicit.add(token[2:].split("=", 1)[0].replace("-", "_"))
    path = Path(args.config)
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}: line {lineno}: expected key=value")
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_")
        value = value.strip().strip('"')
        if not hasattr(args, key):
            raise ValueError(f"{path}: line {lineno}: unknown option {key!r}")
        if key in explicit:
            continue
        current = getattr(args, key)
        if isinstance(current, bool):
            setattr(args, key, value.lower() in ("1", "true", "yes"))
        elif isinstance(current, int):
            setattr(args, key, int(value))
        elif isinstance(current, float):
            setattr(args, key, float(value))
        else:
            setattr(args, key, value)


def _grasp_params(args) -> GraspParams:
    return GraspParams(
        k1=args.k1, k2=args.k2, max_len=args.max_len, t1=args.t1, t2=args.t2,
        w=args.window, scorer=args.scorer, beta=args.beta, seed=args.seed,
    )


def cmd_discover(args) -> int:
    provider = _provider(args)
    fg = load_jsonl(args.foreground)
    bg = load_jsonl(args.background)

    class Contrast:
        foreground = provider.augment_all(fg, args.threads)
        background = provider.augment_all(bg, args.threads)

    ruleset = run_grasp(Contrast(), _grasp_params(args))
    _write_text(args.output, ruleset.dumps() + "\n")
    for i, rule in enumerate(ruleset.rules[: args.top_print]):
        stats = rule.stats
        print(f"{i:3d} {rule.score:8.4f} fg {stats.fg_matched}/{stats.fg_total} "
              f"bg {stats.bg_matched}/{stats.bg_total}  {render(rule.pattern)}")
    print(f"wrote {len(ruleset.rules)} rules to {args.output}")
    return 0


def cmd_split(args) -> int:
    domain = load_jsonl(args.domain)
    if args.method == "ge":
        if not args.general:
            raise ValueError("--method ge requires --general")
        split = split_general_english(domain, load_jsonl(args.general),
                                      args.n_background, args.seed)
    elif args.method == "sib":
        if not args.validation or not args.target_label:
            raise ValueError("--method sib requires --validation and --target-label")
        split = split_sib(
            domain, load_jsonl(args.validation), args.target_label,
            SibParams(n_clusters=args.clusters, n_restarts=args.restarts, seed=args.seed),
        )
    else:
        split = split_halves(domain)
    save_jsonl(split.foreground, args.out_fg)
    save_jsonl(split.background, args.out_bg)
    sidecar = Path(args.out_fg).with_suffix(".provenance.json")
    _write_json(sidecar, {
        "method": split.method,
        "foreground": Path(args.out_fg).name,
        "background": Path(args.out_bg).name,
        "seed": args.seed,
        **split.provenance,
    })
    print(f"{split.method}: fg {len(split.foreground)} / bg {len(split.background)} "
          f"(provenance: {sidecar})")
    return 0


def _metrics_report(method: str, metrics, extra: dict | None = None) -> dict:
    return {
        "method": method,
        "test": metrics.to_json(),
        **(extra or {}),
    }


def cmd_evaluate(args) -> int:
    provider = _provider(args)
    validation = load_jsonl(args.validation)
    test = load_jsonl(args.test)
    if args.label not in set(validation.labels()):
        raise ValueError(f"label {args.label!r} absent from the validation corpus")
    rulesets = {}
    for path in args.rules:
        ruleset = RuleSet.loads(Path(path).read_text(encoding="utf-8"))
        beta = ruleset.params.beta
        if beta in rulesets:
            raise ValueError(f"duplicate beta {beta} among --rules files")
        rulesets[beta] = ruleset
    report = sweep(
        rulesets,
        provider.augment_all(validation, args.threads), validation.labels(),
        provider.augment_all(test, args.threads), test.labels(),
        category=args.label, dataset=args.dataset,
        top_k_grid=[int(x) for x in args.top_k_grid.split(",")],
        min_matches_grid=[int(x) for x in args.min_matches_grid.split(",")],
        threads=args.threads,
    )
    _write_json(args.output, report.to_json())
    if args.grid_csv:
        lines = ["beta,top_k,min_matches,precision,recall,f1"]
        for cfg, m in report.grid:
            lines.append(f"{cfg.beta},{cfg.top_k},{cfg.min_matches},"
                         f"{m.precision:.6f},{m.recall:.6f},{m.f1:.6f}")
        _write_text(args.grid_csv, "\n".join(lines) + "\n")
    print(f"{args.method_name} {report.test.row()}")
    return 0


def cmd_match(args) -> int:
    provider = _provider(args)
    ruleset = RuleSet.loads(Path(args.rules).read_text(encoding="utf-8"))
    corpus = load_jsonl(args.corpus)
    w = ruleset.params.w
    indices = range(len(ruleset.rules)) if args.rule is None else [args.rule]
    if args.rule is not None and not (0 <= args.rule < len(ruleset.rules)):
        raise ValueError(f"--rule {args.rule} out of range (0..{len(ruleset.rules) - 1})")
    lines = []
    for sentence in corpus:
        aug = provider.augment(sentence)
        hits = []
        for i in indices:
            m = match(ruleset.rules[i].pattern, aug, w)
            if m is not None:
                hits.append({"rule": i, "tokens": m})
        if hits:
            lines.append(json.dumps(
                {"id": sentence.id, "matches": hits}, sort_keys=True, ensure_ascii=False
            ))
    _write_text(args.output, "".join(line + "\n" for line in lines))
    print(f"matched {len(lines)} of {len(corpus)} sentences")
    return 0


def cmd_baseline(args) -> int:
    test = load_jsonl(args.test)
    if args.method == "prior":
        metrics = baseline_metrics(prior_classify(test), test, args.label)
        extra = {}
    elif args.method == "nb":
        if not args.domain or not args.general:
            raise ValueError("--method nb requires --domain and --general")
        model = nb_train(load_jsonl(args.domain), load_jsonl(args.general), args.alpha)
        threshold = 0.5
        if args.validation:
            threshold = nb_tune_threshold(model, load_jsonl(args.validation), args.label)
        metrics = baseline_metrics(nb_classify(model, test, threshold), test, args.label)
        extra = {"threshold": threshold, "alpha": args.alpha}
    else:
        if not args.validation:
            raise ValueError("--method sib requires --validation")
        # unsupervised: cluster the test corpus itself, then let the labeled
        # validation sample decide which clusters count as positive
        partition = sib_cluster(
            vectorize(test),
            SibParams(n_clusters=args.clusters, n_restarts=args.restarts, seed=args.seed),
            ids=test.ids(),
        )
        preds = sib_classify(test, partition, load_jsonl(args.validation), args.label)
        metrics = baseline_metrics(preds, test, args.label)
        extra = {"objective": partition.objective, "clusters": args.clusters}
    _write_json(args.output, _metrics_report(args.method, metrics, extra))
    print(f"{args.method} {metrics.row()}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import build_session_from_args, create_app

    session = build_session_from_args(args)
    app = create_app(session, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


_DISPATCH = {
    "discover": cmd_discover,
    "split": cmd_split,
    "evaluate": cmd_evaluate,
    "match": cmd_match,
    "baseline": cmd_baseline,
    "serve": cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args, argv)
        return _DISPATCH[args.command](args)
    except (CorpusFormatError, OSError) as e:
        print(f"contrastminer: I/O error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"contrastminer: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
