"""Sequential information-bottleneck clustering over bag-of-words vectors.

Documents get a uniform prior. Each restart starts from a seeded random
partition into equally populated clusters, then runs sequential sweeps:
every document (in a reshuffled seeded order) is pulled out of its cluster
and reassigned to the cluster minimizing the Jensen-Shannon merge cost

    d(x, t) = (p(x) + p(t)) * JS_pi(p(y|x), p(y|t)),

with pi the relative weights of x and t. Each such step cannot decrease
the objective I(T;Y). The best restart by objective wins.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .corpus import Corpus, tokenize


@dataclass(frozen=True)
class BowVector:
    counts: dict[int, int]
    total: int

    def __post_init__(self):
        if any(c <= 0 for c in self.counts.values()):
            raise ValueError("bag-of-words counts must be positive")
        if self.total != sum(self.counts.values()):
            raise ValueError("total must equal the sum of counts")


class BowSpace:
    """Term-id registry; ids are assigned by first occurrence."""

    def __init__(self):
        self.vocab: dict[str, int] = {}

    def vectorize(self, corpus: Corpus, extend: bool = True) -> list[BowVector]:
        out = []
        for sentence in corpus:
            counts: dict[int, int] = {}
            for tok in tokenize(sentence.text):
                term = tok.surface.lower()
                tid = self.vocab.get(term)
                if tid is None:
                    if not extend:
                        continue
                    tid = len(self.vocab)
                    self.vocab[term] = tid
                counts[tid] = counts.get(tid, 0) + 1
            out.append(BowVector(counts, sum(counts.values())))
        return out


def vectorize(corpus: Corpus) -> list[BowVector]:
    """Lowercased token counts; vocabulary spans all tokens seen, term ids
    by first occurrence."""
    return BowSpace().vectorize(corpus)


@dataclass(frozen=True)
class SibParams:
    n_clusters: int
    n_restarts: int = 10
    max_iterations: int = 15
    early_stop_fraction: float = 0.02
    seed: int = 13

    def __post_init__(self):
        if self.n_clusters < 2:
            raise ValueError("n_clusters must be >= 2")
        if not (0 < self.early_stop_fraction < 1):
            raise ValueError("early_stop_fraction must be in (0, 1)")
        if self.n_restarts < 1 or self.max_iterations < 1:
            raise ValueError("n_restarts and max_iterations must be >= 1")

    def to_json(self) -> dict:
        return {
            "n_clusters": self.n_clusters,
            "n_restarts": self.n_restarts,
            "max_iterations": self.max_iterations,
            "early_stop_fraction": self.early_stop_fraction,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class Partition:
    assignment: dict[str, int]
    objective: float
    params: Optional[SibParams] = None

    def clusters(self) -> dict[int, list[str]]:
        out: dict[int, list[str]] = {}
        for sid, c in self.assignment.items():
            out.setdefault(c, []).append(sid)
        return out

    def to_json(self) -> dict:
        obj = {"assignment": self.assignment, "objective": self.objective}
        if self.params is not None:
            obj["params"] = self.params.to_json()
        return obj


class _SibState:
    """Dense cluster statistics for one restart."""

    def __init__(self, docs: list[tuple[np.ndarray, np.ndarray]], n_clusters: int, vocab_size: int):
        self.docs = docs  # per doc: (term id array, probability array)
        self.n = len(docs)
        self.k = n_clusters
        self.sums = np.zeros((n_clusters, vocab_size))  # sum of member p(y|x)
        self.sizes = np.zeros(n_clusters, dtype=np.int64)
        self.assign = np.full(self.n, -1, dtype=np.int64)

    def add(self, x: int, t: int) -> None:
        ids, probs = self.docs[x]
        self.sums[t, ids] += probs
        self.sizes[t] += 1
        self.assign[x] = t

    def remove(self, x: int) -> int:
        t = self.assign[x]
        ids, probs = self.docs[x]
        self.sums[t, ids] -= probs
        self.sizes[t] -= 1
        self.assign[x] = -1
        return int(t)

    def merge_costs(self, x: int) -> np.ndarray:
        """d(x, t) for every cluster t, with x currently unassigned."""
        ids, probs = self.docs[x]
        n = self.n
        sizes = self.sizes.astype(float)
        pi1 = 1.0 / (1.0 + sizes)        # weight of x within the merge
        pi2 = sizes / (1.0 + sizes)
        ptv = self.sums[:, ids] / sizes[:, None]   # p(y|t) on supp(x)
        m = pi1[:, None] * probs[None, :] + pi2[:, None] * ptv
        kl1 = np.sum(probs[None, :] * (np.log2(probs)[None, :] - np.log2(m)), axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(ptv > 0, ptv / m, 1.0)
            kl2_in = np.sum(ptv * np.log2(ratio), axis=1)
        mass_in = np.sum(ptv, axis=1)
        kl2 = kl2_in - (1.0 - mass_in) * np.log2(pi2)
        js = pi1 * kl1 + pi2 * kl2
        return ((1.0 + sizes) / n) * js

    def objective(self) -> float:
        """I(T;Y) in bits."""
        joint = self.sums / self.n                      # p(t, y)
        pt = self.sizes / self.n
        py = joint.sum(axis=0)
        with np.errstate(divide="ignore", invalid="ignore"):
            denom = pt[:, None] * py[None, :]
            ratio = np.where(joint > 0, joint / denom, 1.0)
            return float(np.sum(joint * np.log2(ratio)))


def _shuffled(rng: random.Random, n: int) -> list[int]:
    order = list(range(n))
    for i in range(n - 1, 0, -1):
        j = int(rng.random() * (i + 1))
        if j > i:
            j = i
        order[i], order[j] = order[j], order[i]
    return order


def _prepare_docs(vectors: Sequence[BowVector]) -> tuple[list[tuple[np.ndarray, np.ndarray]], int]:
    vocab_size = 0
    docs = []
    for v in vectors:
        if not v.counts:
            raise ValueError("cannot cluster an empty document")
        ids = np.fromiter(sorted(v.counts), dtype=np.int64)
        probs = np.array([v.counts[int(i)] / v.total for i in ids])
        docs.append((ids, probs))
        vocab_size = max(vocab_size, int(ids.max()) + 1)
    return docs, vocab_size


def sib_cluster(
    vectors: Sequence[BowVector],
    params: SibParams,
    ids: Optional[Sequence[str]] = None,
    check_invariants: bool = False,
) -> Partition:
    """Cluster documents into params.n_clusters groups; returns the restart
    with the highest objective (ties by restart index)."""
    n = len(vectors)
    if params.n_clusters > n:
        raise ValueError(f"n_clusters={params.n_clusters} exceeds {n} documents")
    if ids is None:
        ids = [str(i) for i in range(n)]
    if len(ids) != n:
        raise ValueError("ids must align with vectors")
    docs, vocab_size = _prepare_docs(vectors)

    best: Optional[tuple[float, np.ndarray]] = None
    for restart in range(params.n_restarts):
        rng = random.Random(params.seed * 1_000_003 + restart)
        state = _SibState(docs, params.n_clusters, vocab_size)
        order = _shuffled(rng, n)
        for pos, x in enumerate(order):  # equally populated random partition
            state.add(x, pos % params.n_clusters)
        prev_objective = state.objective() if check_invariants else None
        for _ in range(params.max_iterations):
            switched = 0
            for x in _shuffled(rng, n):
                old = int(state.assign[x])
                if state.sizes[old] == 1:
                    continue  # moving the sole element would empty the cluster
                state.remove(x)
                target = int(np.argmin(state.merge_costs(x)))
                state.add(x, target)
                if target != old:
                    switched += 1
                if check_invariants:
                    obj = state.objective()
                    if obj < prev_objective - 1e-9:
                        raise AssertionError(
                            f"objective decreased: {prev_objective} -> {obj}"
                        )
                    prev_objective = obj
            if switched < params.early_stop_fraction * n:
                break
        objective = state.objective()
        if best is None or objective > best[0]:
            best = (objective, state.assign.copy())

    assignment = {ids[i]: int(best[1][i]) for i in range(n)}
    return Partition(assignment, best[0], params)


def assign_nearest(
    domain_vectors: Sequence[BowVector],
    partition: Partition,
    domain_ids: Sequence[str],
    new_vectors: Sequence[BowVector],
    vocab_size: Optional[int] = None,
) -> list[int]:
    """Map held-out documents onto an existing partition by the same merge
    cost used during clustering (new documents weighted like one domain
    document). Documents with no known terms go to cluster 0."""
    docs, vs = _prepare_docs(domain_vectors)
    if vocab_size is None:
        vocab_size = vs
        for v in new_vectors:
            if v.counts:
                vocab_size = max(vocab_size, max(v.counts) + 1)
    n_clusters = max(partition.assignment.values()) + 1
    state = _SibState(docs, n_clusters, vocab_size)
    index = {sid: i for i, sid in enumerate(domain_ids)}
    for sid, t in partition.assignment.items():
        state.add(index[sid], t)
    out = []
    for v in new_vectors:
        if not v.counts:
            out.append(0)
            continue
        ids = np.fromiter(sorted(v.counts), dtype=np.int64)
        probs = np.array([v.counts[int(i)] / v.total for i in ids])
        state.docs.append((ids, probs))
        x = len(state.docs) - 1
        out.append(int(np.argmin(state.merge_costs(x))))
        state.docs.pop()
    return out


def exhaustive_best_bipartition(vectors: Sequence[BowVector]) -> float:
    """Highest I(T;Y) over all 2-cluster partitions (both clusters
    non-empty). Exponential; for small inputs and tests only."""
    n = len(vectors)
    docs, vocab_size = _prepare_docs(vectors)
    best = -math.inf
    for bits in range(1, 2 ** (n - 1)):
        state = _SibState(docs, 2, vocab_size)
        for i in range(n):
            state.add(i, (bits >> i) & 1)
        if state.sizes.min() == 0:
            continue
        best = max(best, state.objective())
    return best
