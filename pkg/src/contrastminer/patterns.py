"""Pattern mining core: gapped-window matching, scoring, alphabet
selection, iterative growth with greedy pruning, and rule rendering.

A pattern is an ordered sequence of attribute slots. It matches a sentence
when there are token positions i1 < i2 < ... < in, one per slot, where
each token's attribute set contains the whole slot and consecutive
positions are at most `w` apart. Matching, growth and selection are fully
deterministic: every tie is broken by the canonical string form of the
pattern, so identical inputs yield identical rule sets on any platform or
thread count.

Internally match sets are kept as bit masks (one bit per sentence or token
position), which keeps the growth loop fast without changing semantics.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .attributes import Attribute, AugmentedSentence

# ---------------------------------------------------------------------------
# Pattern


@dataclass(frozen=True)
class Pattern:
    """Ordered, non-empty attribute slots; each slot a non-empty set."""

    slots: tuple[frozenset[Attribute], ...]

    def __post_init__(self):
        if not self.slots:
            raise ValueError("pattern needs at least one slot")
        for slot in self.slots:
            if not slot:
                raise ValueError("pattern slots must be non-empty")
            if sum(1 for a in slot if a.namespace == "TEXT") > 1:
                raise ValueError("a slot cannot require two TEXT attributes")
            if sum(1 for a in slot if a.namespace == "POS") > 1:
                raise ValueError("a slot cannot require two POS attributes")

    @staticmethod
    def of(*slots: Iterable[Attribute]) -> "Pattern":
        return Pattern(tuple(frozenset(s) for s in slots))

    @property
    def attr_count(self) -> int:
        return sum(len(s) for s in self.slots)

    def canonical(self) -> tuple[tuple[str, ...], ...]:
        """Slots as tuples of "NAMESPACE:value" strings in sorted order; the
        equality, ordering and serialization key for patterns."""
        return tuple(tuple(sorted(a.render() for a in slot)) for slot in self.slots)

    def to_json_slots(self) -> list[list[str]]:
        return [list(slot) for slot in self.canonical()]

    @staticmethod
    def from_json_slots(slots: Sequence[Sequence[str]]) -> "Pattern":
        return Pattern(tuple(frozenset(Attribute.parse(a) for a in slot) for slot in slots))


def slot_accepts(slot: frozenset[Attribute], attr: Attribute) -> bool:
    """Whether `attr` may be merged into `slot` without breaking slot
    validity (no duplicate attribute, at most one TEXT and one POS)."""
    if attr in slot:
        return False
    if attr.namespace in ("TEXT", "POS") and any(a.namespace == attr.namespace for a in slot):
        return False
    return True


# ---------------------------------------------------------------------------
# Matching


def _window_back(mask: int, w: int) -> int:
    """Positions p with some q in `mask` satisfying p < q <= p + w."""
    out = 0
    for _ in range(w):
        mask >>= 1
        out |= mask
    return out


def _window_fwd(mask: int, w: int) -> int:
    """Positions q with some p in `mask` satisfying p < q <= p + w."""
    out = 0
    for _ in range(w):
        mask <<= 1
        out |= mask
    return out


def _slot_masks(pattern: Pattern, sentence: AugmentedSentence) -> list[int]:
    attr_masks: dict[Attribute, int] = {}
    for i, attrs in enumerate(sentence.attributes):
        bit = 1 << i
        for a in attrs:
            attr_masks[a] = attr_masks.get(a, 0) | bit
    masks = []
    for slot in pattern.slots:
        m = ~0
        for a in slot:
            m &= attr_masks.get(a, 0)
            if not m:
                break
        masks.append(m if m > 0 else 0)
    return masks


def match(pattern: Pattern, sentence: AugmentedSentence, w: int) -> Optional[list[int]]:
    """Leftmost match of `pattern` in `sentence` under window `w`, or None.

    Returns token indices i1 < ... < in with slot j satisfied at ij and
    i(j+1) - ij <= w; among all complete matches the lexicographically
    smallest index vector is returned.
    """
    if w < 1:
        raise ValueError("window must be >= 1")
    slot_masks = _slot_masks(pattern, sentence)
    n = len(slot_masks)
    # feasible[j]: positions where slot j can sit in some completion of slots j..n-1
    feasible = [0] * n
    feasible[n - 1] = slot_masks[n - 1]
    for j in range(n - 2, -1, -1):
        feasible[j] = slot_masks[j] & _window_back(feasible[j + 1], w)
    if not feasible[0]:
        return None
    indices = []
    prev = -1
    for j in range(n):
        candidates = feasible[j]
        if prev >= 0:
            lo, hi = prev + 1, prev + w
            candidates &= ((1 << (hi + 1)) - 1) & ~((1 << lo) - 1)
        pick = (candidates & -candidates).bit_length() - 1
        indices.append(pick)
        prev = pick
    return indices


def matches(pattern: Pattern, sentence: AugmentedSentence, w: int) -> bool:
    return match(pattern, sentence, w) is not None


# ---------------------------------------------------------------------------
# Scoring


@dataclass(frozen=True)
class MatchStats:
    fg_matched: int
    fg_total: int
    bg_matched: int
    bg_total: int

    def __post_init__(self):
        if not (0 <= self.fg_matched <= self.fg_total and 0 <= self.bg_matched <= self.bg_total):
            raise ValueError(f"inconsistent match stats: {self}")

    def to_json(self) -> dict:
        return {
            "fg_matched": self.fg_matched,
            "fg_total": self.fg_total,
            "bg_matched": self.bg_matched,
            "bg_total": self.bg_total,
        }

    @staticmethod
    def from_json(obj: dict) -> "MatchStats":
        return MatchStats(obj["fg_matched"], obj["fg_total"], obj["bg_matched"], obj["bg_total"])


def _entropy2(counts: Sequence[float]) -> float:
    total = sum(counts)
    if total <= 0:
        return 0.0
    h = 0.0
    for c in counts:
        if c > 0:
            p = c / total
            h -= p * math.log2(p)
    return h


def score_info_gain(stats: MatchStats) -> float:
    """Information gain (bits) between the foreground/background indicator
    and the pattern's match indicator."""
    n = stats.fg_total + stats.bg_total
    if n <= 0:
        raise ValueError("info gain needs a non-empty contrast corpus")
    a, b = stats.fg_matched, stats.bg_matched
    h_prior = _entropy2([stats.fg_total, stats.bg_total])
    matched = a + b
    unmatched = n - matched
    h_cond = 0.0
    if matched:
        h_cond += (matched / n) * _entropy2([a, b])
    if unmatched:
        h_cond += (unmatched / n) * _entropy2([stats.fg_total - a, stats.bg_total - b])
    return h_prior - h_cond


def score_f_beta(stats: MatchStats, beta: float) -> float:
    """F_beta of the pattern as a foreground detector: small beta favors
    precision."""
    if beta <= 0:
        raise ValueError("beta must be > 0")
    a = stats.fg_matched
    precision = a / (a + stats.bg_matched) if (a + stats.bg_matched) else 0.0
    recall = a / stats.fg_total if stats.fg_total else 0.0
    if precision == 0.0 and recall == 0.0:
        return 0.0
    b2 = beta * beta
    return (1 + b2) * precision * recall / (b2 * precision + recall)


@dataclass(frozen=True)
class GraspParams:
    k1: int = 1000
    k2: int = 100
    max_len: int = 5
    t1: float = 0.005
    t2: float = 0.5
    w: int = 5
    scorer: str = "f_beta"  # "info_gain" or "f_beta"
    beta: float = 0.1
    seed: int = 13

    def __post_init__(self):
        if min(self.k1, self.k2, self.max_len, self.w) < 1:
            raise ValueError("k1, k2, max_len and w must be >= 1")
        if not (0 <= self.t1 <= 1 and 0 <= self.t2 <= 1):
            raise ValueError("t1 and t2 must be within [0, 1]")
        if self.scorer not in ("info_gain", "f_beta"):
            raise ValueError(f"unknown scorer {self.scorer!r}")
        if self.scorer == "f_beta" and self.beta <= 0:
            raise ValueError("beta must be > 0 for the f_beta scorer")

    def scorer_fn(self) -> Callable[[MatchStats], float]:
        if self.scorer == "info_gain":
            return score_info_gain
        beta = self.beta
        return lambda stats: score_f_beta(stats, beta)

    def to_json(self) -> dict:
        return {
            "k1": self.k1, "k2": self.k2, "max_len": self.max_len,
            "t1": self.t1, "t2": self.t2, "w": self.w,
            "scorer": self.scorer, "beta": self.beta, "seed": self.seed,
        }

    @staticmethod
    def from_json(obj: dict) -> "GraspParams":
        return GraspParams(**obj)


@dataclass(frozen=True)
class ScoredRule:
    pattern: Pattern
    score: float
    stats: MatchStats
    matched_fg_ids: frozenset[str] = frozenset()

    def to_json(self) -> dict:
        return {
            "slots": self.pattern.to_json_slots(),
            "score": self.score,
            "stats": self.stats.to_json(),
        }

    @staticmethod
    def from_json(obj: dict) -> "ScoredRule":
        return ScoredRule(
            pattern=Pattern.from_json_slots(obj["slots"]),
            score=float(obj["score"]),
            stats=MatchStats.from_json(obj["stats"]),
        )


@dataclass(frozen=True)
class RuleSet:
    rules: tuple[ScoredRule, ...]
    params: GraspParams

    def to_json(self) -> dict:
        return {"params": self.params.to_json(), "rules": [r.to_json() for r in self.rules]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1, ensure_ascii=False)

    @staticmethod
    def from_json(obj: dict) -> "RuleSet":
        return RuleSet(
            rules=tuple(ScoredRule.from_json(r) for r in obj["rules"]),
            params=GraspParams.from_json(obj["params"]),
        )

    @staticmethod
    def loads(text: str) -> "RuleSet":
        return RuleSet.from_json(json.loads(text))


def jaccard(a: frozenset | set, b: frozenset | set) -> float:
    union = len(a | b)
    return len(a & b) / union if union else 0.0


def dedup(scored: Sequence[ScoredRule], t2: float) -> list[ScoredRule]:
    """Greedy correlation pruning over a score-sorted rule list: keep a rule
    iff its foreground-match Jaccard with every kept rule is < t2."""
    kept: list[ScoredRule] = []
    for rule in scored:
        if all(jaccard(rule.matched_fg_ids, k.matched_fg_ids) < t2 for k in kept):
            kept.append(rule)
    return kept


# ---------------------------------------------------------------------------
# Alphabet and growth


def _doc_attr_sets(sentences: Sequence[AugmentedSentence]) -> list[set[Attribute]]:
    out = []
    for s in sentences:
        present: set[Attribute] = set()
        for attrs in s.attributes:
            present |= attrs
        out.append(present)
    return out


def build_alphabet(
    fg: Sequence[AugmentedSentence],
    bg: Sequence[AugmentedSentence],
    params: GraspParams,
) -> list[Attribute]:
    """Top-k1 attributes by the configured scorer, restricted to those whose
    document frequency over fg+bg is at least t1. Ties break by canonical
    attribute rendering, ascending."""
    if not fg or not bg:
        raise ValueError("both sides of the contrast corpus must be non-empty")
    fg_docs = _doc_attr_sets(fg)
    bg_docs = _doc_attr_sets(bg)
    df: dict[Attribute, int] = {}
    for docs in (fg_docs, bg_docs):
        for present in docs:
            for a in present:
                df[a] = df.get(a, 0) + 1
    threshold = params.t1 * (len(fg) + len(bg))
    candidates = [a for a, n in df.items() if n >= threshold]
    if not candidates:
        raise ValueError(f"no attribute reaches document frequency t1={params.t1}")
    scorer = params.scorer_fn()
    scored = []
    for a in candidates:
        fg_n = sum(1 for present in fg_docs if a in present)
        bg_n = sum(1 for present in bg_docs if a in present)
        stats = MatchStats(fg_n, len(fg), bg_n, len(bg))
        scored.append((-scorer(stats), a.render(), a))
    scored.sort(key=lambda t: t[:2])
    return [a for _, _, a in scored[: params.k1]]


def grow(patterns: Sequence[Pattern], alphabet: Sequence[Attribute], params: GraspParams) -> list[Pattern]:
    """One growth step: for every pattern and alphabet attribute, emit the
    APPEND form (attribute as a new final slot) and every valid MERGE form
    (attribute unioned into one existing slot). Deduplicated by canonical
    form; input patterns are not re-emitted."""
    for p in patterns:
        if p.attr_count >= params.max_len:
            raise ValueError("grow requires patterns with fewer than max_len attributes")
    inputs = {p.canonical() for p in patterns}
    seen: dict[tuple, Pattern] = {}
    for p in patterns:
        for a in alphabet:
            appended = Pattern(p.slots + (frozenset([a]),))
            seen.setdefault(appended.canonical(), appended)
            for j, slot in enumerate(p.slots):
                if slot_accepts(slot, a):
                    merged = Pattern(p.slots[:j] + (slot | {a},) + p.slots[j + 1:])
                    seen.setdefault(merged.canonical(), merged)
    return [seen[k] for k in sorted(seen) if k not in inputs]


# ---------------------------------------------------------------------------
# run_grasp: the full mining loop


class _SentenceIndex:
    """Alphabet-filtered view of one sentence: per-attribute position masks
    and per-position attribute id tuples."""

    __slots__ = ("length", "attr_masks", "pos_attrs", "full_mask")

    def __init__(self, sentence: AugmentedSentence, attr_ids: dict[Attribute, int]):
        self.length = len(sentence)
        self.attr_masks: dict[int, int] = {}
        pos_attrs = []
        for i, attrs in enumerate(sentence.attributes):
            bit = 1 << i
            ids = []
            for a in attrs:
                aid = attr_ids.get(a)
                if aid is not None:
                    ids.append(aid)
                    self.attr_masks[aid] = self.attr_masks.get(aid, 0) | bit
            pos_attrs.append(tuple(ids))
        self.pos_attrs = pos_attrs
        self.full_mask = (1 << self.length) - 1

    def slot_mask(self, slot_ids: Iterable[int]) -> int:
        m = self.full_mask
        for aid in slot_ids:
            m &= self.attr_masks.get(aid, 0)
            if not m:
                return 0
        return m

    def forward_masks(self, slots_ids: Sequence[Sequence[int]], w: int) -> Optional[list[int]]:
        """Feasible positions for each slot given all previous slots, or
        None as soon as the pattern cannot match."""
        masks = []
        prev = None
        for slot in slots_ids:
            m = self.slot_mask(slot)
            if prev is not None:
                m &= _window_fwd(prev, w) & self.full_mask
            if not m:
                return None
            masks.append(m)
            prev = m
        return masks

    def backward_masks(self, slots_ids: Sequence[Sequence[int]], w: int) -> list[int]:
        masks = [0] * len(slots_ids)
        nxt = None
        for j in range(len(slots_ids) - 1, -1, -1):
            m = self.slot_mask(slots_ids[j])
            if nxt is not None:
                m &= _window_back(nxt, w)
            masks[j] = m
            nxt = m
        return masks


@dataclass
class _Candidate:
    pattern: Pattern
    key: tuple
    slots_ids: tuple[tuple[int, ...], ...]
    fg_count: int = 0
    bg_count: int = 0
    parent: Optional["_Survivor"] = None  # restricts lazy mask recompute
    score: float = 0.0


@dataclass
class _Survivor:
    pattern: Pattern
    key: tuple
    slots_ids: tuple[tuple[int, ...], ...]
    score: float
    stats: MatchStats
    fg_mask: int
    bg_mask: int


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _GraspEngine:
    def __init__(self, fg: Sequence[AugmentedSentence], bg: Sequence[AugmentedSentence], params: GraspParams):
        if not fg or not bg:
            raise ValueError("both sides of the contrast corpus must be non-empty")
        self.fg = list(fg)
        self.bg = list(bg)
        self.params = params
        self.scorer = params.scorer_fn()
        self.alphabet = build_alphabet(self.fg, self.bg, params)
        self.attr_ids = {a: i for i, a in enumerate(self.alphabet)}
        self.fg_index = [_SentenceIndex(s, self.attr_ids) for s in self.fg]
        self.bg_index = [_SentenceIndex(s, self.attr_ids) for s in self.bg]
        # sentence-level corpus masks per attribute id
        self.fg_attr_corpus = self._corpus_masks(self.fg_index)
        self.bg_attr_corpus = self._corpus_masks(self.bg_index)
        # attribute ids per namespace, for merge validity pruning
        self.ns_ids: dict[str, frozenset[int]] = {}
        for aid, a in enumerate(self.alphabet):
            self.ns_ids.setdefault(a.namespace, set()).add(aid)  # type: ignore[arg-type]
        self.ns_ids = {ns: frozenset(ids) for ns, ids in self.ns_ids.items()}

    def _corpus_masks(self, index: list[_SentenceIndex]) -> list[int]:
        masks = [0] * len(self.alphabet)
        for si, sent in enumerate(index):
            bit = 1 << si
            for aid in sent.attr_masks:
                masks[aid] |= bit
        return masks

    # -- exact match-set computation for one pattern over one side ---------

    def _match_mask(self, slots_ids, side_index, restrict_mask=None) -> int:
        w = self.params.w
        out = 0
        if restrict_mask is None:
            restrict_mask = (1 << len(side_index)) - 1
        for si in _iter_bits(restrict_mask):
            if side_index[si].forward_masks(slots_ids, w) is not None:
                out |= 1 << si
        return out

    def _upper_bound_mask(self, slots_ids, corpus_masks, n: int) -> int:
        m = (1 << n) - 1
        for slot in slots_ids:
            for aid in slot:
                m &= corpus_masks[aid]
                if not m:
                    return 0
        return m

    def _single_rules(self) -> list[_Survivor]:
        out = []
        nf, nb = len(self.fg), len(self.bg)
        for aid, attr in enumerate(self.alphabet):
            fg_mask = self.fg_attr_corpus[aid]
            bg_mask = self.bg_attr_corpus[aid]
            stats = MatchStats(fg_mask.bit_count(), nf, bg_mask.bit_count(), nb)
            pattern = Pattern.of([attr])
            out.append(
                _Survivor(pattern, pattern.canonical(), ((aid,),),
                          self.scorer(stats), stats, fg_mask, bg_mask)
            )
        return out

    # -- one growth iteration ----------------------------------------------

    def _grow_candidates(self, survivors: list[_Survivor]) -> list[_Candidate]:
        """All grow() candidates with exact fg/bg match counts. Counts are
        found by scanning, for every surviving pattern, the window
        positions where a new attribute could extend or tighten a match."""
        params = self.params
        growable = [s for s in survivors if s.pattern.attr_count < params.max_len]
        if not growable:
            return []
        w = params.w
        n_alpha = len(self.alphabet)
        by_key: dict[tuple, _Candidate] = {}
        patterns = [s.pattern for s in growable]
        for cand_pattern in grow(patterns, self.alphabet, params):
            key = cand_pattern.canonical()
            slots_ids = tuple(
                tuple(sorted(self.attr_ids[Attribute.parse(r)] for r in slot))
                for slot in key
            )
            by_key[key] = _Candidate(cand_pattern, key, slots_ids)

        # (move encoding) slot j in [0, n_slots): merge into slot j; n_slots: append
        for surv in growable:
            n_slots = len(surv.slots_ids)
            counts: dict[int, list[int]] = {}
            slot_block: list[frozenset[int]] = []
            for slot_attrs, slot_ids in zip(surv.pattern.slots, surv.slots_ids):
                blocked = set(slot_ids)
                for ns in ("TEXT", "POS"):
                    if any(a.namespace == ns for a in slot_attrs):
                        blocked |= self.ns_ids.get(ns, frozenset())
                slot_block.append(frozenset(blocked))
            for side, side_index, mask in (
                (0, self.fg_index, surv.fg_mask),
                (1, self.bg_index, surv.bg_mask),
            ):
                for si in _iter_bits(mask):
                    sent = side_index[si]
                    fwd = sent.forward_masks(surv.slots_ids, w)
                    if fwd is None:  # mask is exact, so this cannot happen
                        continue
                    bwd = sent.backward_masks(surv.slots_ids, w)
                    seen_moves: set[int] = set()
                    # APPEND: positions reachable after the last slot
                    append_zone = _window_fwd(fwd[-1], w) & sent.full_mask
                    for pos in _iter_bits(append_zone):
                        for aid in sent.pos_attrs[pos]:
                            seen_moves.add(n_slots * n_alpha + aid)
                    # MERGE into slot j: positions usable for slot j in a full match
                    for j in range(n_slots):
                        usable = fwd[j] & bwd[j]
                        if not usable:
                            continue
                        base = j * n_alpha
                        blocked = slot_block[j]
                        for pos in _iter_bits(usable):
                            for aid in sent.pos_attrs[pos]:
                                if aid not in blocked:
                                    seen_moves.add(base + aid)
                    for move in seen_moves:
                        row = counts.get(move)
                        if row is None:
                            counts[move] = [1, 0] if side == 0 else [0, 1]
                        else:
                            row[side] += 1
            # fold this survivor's counts into the global candidate table
            for move, (ca, cb) in counts.items():
                slot_j, aid = divmod(move, n_alpha)
                attr = self.alphabet[aid]
                if slot_j == n_slots:
                    cand_pattern = Pattern(surv.pattern.slots + (frozenset([attr]),))
                else:
                    slot = surv.pattern.slots[slot_j]
                    if not slot_accepts(slot, attr):
                        continue
                    cand_pattern = Pattern(
                        surv.pattern.slots[:slot_j] + (slot | {attr},) + surv.pattern.slots[slot_j + 1:]
                    )
                cand = by_key.get(cand_pattern.canonical())
                if cand is None:
                    continue  # grown form equals an input pattern; already pooled
                if cand.parent is None:
                    cand.fg_count, cand.bg_count = ca, cb
                    cand.parent = surv
        return list(by_key.values())

    def _select(self, pool: list) -> list[_Survivor]:
        """Score-sort the pooled rules, then greedily keep up to k2 rules
        whose fg-match Jaccard with every kept rule is < t2."""
        params = self.params
        nf, nb = len(self.fg), len(self.bg)
        entries = []
        for item in pool:
            if isinstance(item, _Survivor):
                entries.append((-item.score, item.key, item))
            else:
                stats = MatchStats(item.fg_count, nf, item.bg_count, nb)
                item.score = self.scorer(stats)
                entries.append((-item.score, item.key, item))
        entries.sort(key=lambda t: t[:2])
        kept: list[_Survivor] = []
        for _, key, item in entries:
            if len(kept) >= params.k2:
                break
            if isinstance(item, _Survivor):
                surv = item
            else:
                surv = self._materialize(item)
            ok = True
            for k in kept:
                inter = (surv.fg_mask & k.fg_mask).bit_count()
                union = (surv.fg_mask | k.fg_mask).bit_count()
                jac = inter / union if union else 0.0
                if jac >= params.t2:
                    ok = False
                    break
            if ok:
                kept.append(surv)
        return kept

    def _materialize(self, cand: _Candidate) -> _Survivor:
        """Compute exact fg/bg match masks for a candidate (restricted to its
        parent's match sets when known)."""
        nf, nb = len(self.fg), len(self.bg)
        if cand.parent is not None:
            fg_restrict, bg_restrict = cand.parent.fg_mask, cand.parent.bg_mask
        else:
            fg_restrict = self._upper_bound_mask(cand.slots_ids, self.fg_attr_corpus, nf)
            bg_restrict = self._upper_bound_mask(cand.slots_ids, self.bg_attr_corpus, nb)
        fg_mask = self._match_mask(cand.slots_ids, self.fg_index, fg_restrict)
        bg_mask = self._match_mask(cand.slots_ids, self.bg_index, bg_restrict)
        stats = MatchStats(fg_mask.bit_count(), nf, bg_mask.bit_count(), nb)
        return _Survivor(cand.pattern, cand.key, cand.slots_ids, self.scorer(stats), stats, fg_mask, bg_mask)

    def run(self) -> "RuleSet":
        params = self.params
        survivors = self._select(self._single_rules())
        for _ in range(1, params.max_len):
            candidates = self._grow_candidates(survivors)
            surviving_keys = {s.key for s in survivors}
            pool: list = list(survivors)
            pool.extend(c for c in candidates if c.key not in surviving_keys)
            survivors = self._select(pool)
        fg_ids = [s.sentence_id for s in self.fg]
        rules = tuple(
            ScoredRule(
                pattern=s.pattern,
                score=s.score,
                stats=s.stats,
                matched_fg_ids=frozenset(fg_ids[i] for i in _iter_bits(s.fg_mask)),
            )
            for s in survivors
        )
        return RuleSet(rules=rules, params=params)


def run_grasp(contrast, params: GraspParams) -> RuleSet:
    """Full mining pipeline over a contrast corpus (an object with
    `foreground` and `background` lists of AugmentedSentence): build the
    alphabet, seed with single-attribute rules, grow for max_len - 1
    iterations with greedy scoring + correlation dedup, and return the top
    k2 survivors."""
    return _GraspEngine(contrast.foreground, contrast.background, params).run()


# ---------------------------------------------------------------------------
# Rendering and parsing

_POS_PHRASES = {
    "CC": "coordinating conjunction",
    "CD": "cardinal number",
    "DT": "determiner",
    "EX": "existential there",
    "IN": "preposition",
    "JJ": "adjective",
    "JJR": "comparative adjective",
    "JJS": "superlative adjective",
    "MD": "modal",
    "NN": "noun",
    "NNS": "plural noun",
    "NNP": "proper noun",
    "NNPS": "plural proper noun",
    "PDT": "predeterminer",
    "POS": "possessive ending",
    "PRP": "personal pronoun",
    "PRP$": "possessive pronoun",
    "RB": "adverb",
    "RBR": "comparative adverb",
    "RBS": "superlative adverb",
    "RP": "particle",
    "SYM": "symbol",
    "TO": "to",
    "UH": "interjection",
    "VB": "verb, base form",
    "VBD": "verb, past tense",
    "VBG": "verb, gerund",
    "VBN": "verb, past participle",
    "VBP": "verb, non-3rd person singular present",
    "VBZ": "verb, 3rd person singular present",
    "WDT": "wh-determiner",
    "WP": "wh-pronoun",
    "WP$": "possessive wh-pronoun",
    "WRB": "wh-adverb",
}
_PHRASE_TO_POS = {v: k for k, v in _POS_PHRASES.items()}


class PatternSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _render_attr(attr: Attribute) -> str:
    ns, v = attr.namespace, attr.value
    if ns == "TEXT":
        return f"word '{v}'"
    if ns == "LEMMA":
        return f"lemma '{v}'"
    if ns == "HYPERNYM":
        return f"hyponym of {v.replace('_', ' ')}"
    if ns == "SUPERCLASS":
        if v.startswith("noun."):
            return f"WordNet super class of {v[5:]}"
        if v.startswith("verb."):
            return f"WordNet verb super class of {v[5:]}"
        return f"WordNet super class of {v}"
    if ns == "POS":
        return _POS_PHRASES.get(v, f"part-of-speech {v}")
    if ns == "SENTIMENT":
        return f"{v} sentiment word"
    return f"named entity {v}"


def render(pattern: Pattern) -> str:
    """Human-readable form, e.g.
    "<hyponym of rank> + <WordNet super class of communication>". Slots are
    wrapped in angle brackets and joined by " + "; attributes within a slot
    join with "&". Canonical attribute order, so render/parse round-trip."""
    slots = []
    for slot_key in pattern.canonical():
        slots.append("⟨" + "&".join(_render_attr(Attribute.parse(r)) for r in slot_key) + "⟩")
    return " + ".join(slots)


def _parse_attr(text: str, offset: int) -> Attribute:
    if text.startswith("word '") and text.endswith("'") and len(text) > 7:
        return Attribute("TEXT", text[6:-1])
    if text.startswith("lemma '") and text.endswith("'") and len(text) > 8:
        return Attribute("LEMMA", text[7:-1])
    if text.startswith("hyponym of "):
        return Attribute("HYPERNYM", text[len("hyponym of "):].replace(" ", "_"))
    if text.startswith("WordNet verb super class of "):
        return Attribute("SUPERCLASS", "verb." + text[len("WordNet verb super class of "):])
    if text.startswith("WordNet super class of "):
        v = text[len("WordNet super class of "):]
        return Attribute("SUPERCLASS", v if "." in v else "noun." + v)
    if text.startswith("named entity "):
        return Attribute("NER", text[len("named entity "):])
    if text.startswith("part-of-speech "):
        return Attribute("POS", text[len("part-of-speech "):])
    if text.endswith(" sentiment word"):
        return Attribute("SENTIMENT", text[: -len(" sentiment word")])
    if text in _PHRASE_TO_POS:
        return Attribute("POS", _PHRASE_TO_POS[text])
    raise PatternSyntaxError(f"unrecognized attribute {text!r}", offset)


def _split_slot_attrs(slot_text: str, offset: int) -> list[tuple[str, int]]:
    """Split a slot body on '&', keeping quoted TEXT/LEMMA values (which may
    themselves contain '&') intact."""
    parts: list[tuple[str, int]] = []
    i = 0
    n = len(slot_text)
    while i < n:
        start = i
        if slot_text.startswith(("word '", "lemma '"), i):
            qopen = slot_text.index("'", i) + 1
            j = qopen
            close = -1
            while True:
                j = slot_text.find("'", j)
                if j < 0:
                    break
                if j + 1 == n or slot_text[j + 1] == "&":
                    close = j
                    break
                j += 1
            if close < 0:
                raise PatternSyntaxError("unterminated quoted value", offset + i)
            end = close + 1
        else:
            nxt = slot_text.find("&", i)
            end = n if nxt < 0 else nxt
        parts.append((slot_text[start:end], offset + start))
        i = end
        if i < n:
            if slot_text[i] != "&":
                raise PatternSyntaxError("expected '&' between attributes", offset + i)
            i += 1
            if i >= n:
                raise PatternSyntaxError("dangling '&'", offset + i)
    return parts


def parse_rule(text: str) -> Pattern:
    """Inverse of render() on canonical forms."""
    stripped = text.strip()
    if not (stripped.startswith("⟨") and stripped.endswith("⟩")):
        raise PatternSyntaxError("rule must start with '⟨' and end with '⟩'", 0)
    body = stripped[1:-1]
    slots = []
    offset = 1
    for slot_text in body.split("⟩ + ⟨"):
        attrs = []
        for attr_text, pos in _split_slot_attrs(slot_text, offset):
            attrs.append(_parse_attr(attr_text, pos))
        if not attrs:
            raise PatternSyntaxError("empty slot", offset)
        slots.append(frozenset(attrs))
        offset += len(slot_text) + len("⟩ + ⟨")
    return Pattern(tuple(slots))
