"""Exhaustive containment search, used as ground truth on small instances."""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Sequence

from .embedder import Embedding, TreeHostArityMismatch, verify_embedding
from .hypergraph import Edge, Hypergraph
from .tree import TightTree, validate_construction


class Verdict(str, Enum):
    FOUND = "found"
    ABSENT = "absent"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class SearchBudget:
    nodes: int | None = 2_000_000
    seconds: float | None = None

    def __post_init__(self):
        if self.nodes is not None and self.nodes <= 0:
            raise ValueError("node budget must be positive")
        if self.seconds is not None and self.seconds <= 0:
            raise ValueError("time budget must be positive")


@dataclass
class OracleResult:
    verdict: Verdict
    nodes: int
    embedding: Embedding | None = None
    tree: TightTree | None = None

    @property
    def found(self) -> bool:
        return self.verdict is Verdict.FOUND


class _OutOfBudget(Exception):
    pass


class _Meter:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.deadline = None if budget.seconds is None else time.monotonic() + budget.seconds

    def tick(self):
        self.nodes += 1
        if self.budget.nodes is not None and self.nodes > self.budget.nodes:
            raise _OutOfBudget
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget


def contains_tree(H: Hypergraph, T: TightTree, budget: SearchBudget = SearchBudget()) -> OracleResult:
    """Decide whether H contains a copy of T by backtracking in construction order."""
    if H.r != T.r:
        raise TreeHostArityMismatch(f"tree is {T.r}-uniform but host is {H.r}-uniform")
    meter = _Meter(budget)
    if len(H.non_isolated()) < T.t + T.r - 1:
        return OracleResult(Verdict.ABSENT, 0)

    comps = H.index.completions
    steps = T.steps
    spines = [s.spine for s in steps]
    # position in construction order where each later step's spine is fully placed
    ready_after = [[] for _ in range(len(steps) + 1)]
    placed_at = {v: 0 for v in T.root}
    for j, s in enumerate(steps):
        placed_at[s.new] = j + 1
        ready_after[max(placed_at[v] for v in spines[j])].append(j)

    phi: dict[int, int] = {}
    used: set[int] = set()

    def alive(i: int) -> bool:
        # every step whose spine just became fully placed still has a free completion
        for j in ready_after[i]:
            if j < i:
                continue
            image = tuple(sorted(phi[v] for v in spines[j]))
            if not comps.get(image, set()) - used:
                return False
        return True

    def extend(i: int) -> bool:
        meter.tick()
        if i == len(steps):
            return True
        image = tuple(sorted(phi[v] for v in spines[i]))
        new = steps[i].new
        for y in sorted(comps.get(image, set()) - used):
            phi[new] = y
            used.add(y)
            if alive(i + 1) and extend(i + 1):
                return True
            del phi[new]
            used.discard(y)
        return False

    try:
        for edge in H.edges:
            for image in permutations(edge):
                phi.clear()
                phi.update(zip(T.root, image))
                used.clear()
                used.update(image)
                if alive(0) and extend(0):
                    emb = Embedding(dict(phi), [tuple(sorted(phi[v] for v in e)) for e in T.edges])
                    assert verify_embedding(H, T, emb.mapping)
                    return OracleResult(Verdict.FOUND, meter.nodes, emb)
    except _OutOfBudget:
        return OracleResult(Verdict.BUDGET_EXHAUSTED, meter.nodes)
    return OracleResult(Verdict.ABSENT, meter.nodes)


def contains_any_tight_tree(H: Hypergraph, t: int, min_class: int = 1,
                            budget: SearchBudget = SearchBudget(),
                            blocks: Sequence[int] | None = None) -> OracleResult:
    """Is there a tight tree with t edges in H whose classes all have >= min_class vertices?

    Trees are grown inside H one edge at a time; states are deduplicated by
    their edge set.  ``blocks`` optionally labels host vertices with sub-parts
    and prunes any tree using two different sub-parts of one host class.
    """
    if t < 1 or min_class < 1:
        raise ValueError("need t >= 1 and min_class >= 1")
    r = H.r
    meter = _Meter(budget)
    if len(H.non_isolated()) < t + r - 1 or r * min_class > t + r - 1:
        return OracleResult(Verdict.ABSENT, 0)
    if blocks is not None and H.partition is None:
        raise ValueError("block pruning needs an r-partite host")

    comps = H.index.completions
    seen: set[frozenset[Edge]] = set()

    def mixes(y: int, verts) -> bool:
        c = H.partition[y]
        return any(H.partition[w] == c and blocks[w] != blocks[y] for w in verts)

    def grow(edges: list[Edge], cls: dict[int, int], counts: list[int], record: list) -> list | None:
        key = frozenset(edges)
        if key in seen:
            return None
        seen.add(key)
        meter.tick()
        if len(edges) == t:
            return record if min(counts) >= min_class else None
        left = t - len(edges) - 1
        for f in edges:
            for x in f:
                spine = tuple(v for v in f if v != x)
                c = cls[x]
                for y in sorted(comps[spine] - cls.keys()):
                    if blocks is not None and mixes(y, cls):
                        continue
                    counts[c] += 1
                    deficit = sum(max(0, min_class - k) for k in counts)
                    if deficit <= left:
                        e = tuple(sorted(spine + (y,)))
                        cls[y] = c
                        got = grow(edges + [e], cls, counts,
                                   record + [(e, y, edges.index(f) + 1)])
                        del cls[y]
                        if got is not None:
                            counts[c] -= 1
                            return got
                    counts[c] -= 1
        return None

    try:
        for root in H.edges:
            counts = [1] * r
            got = grow([root], {v: k for k, v in enumerate(root)}, counts, [root])
            if got is not None:
                return OracleResult(Verdict.FOUND, meter.nodes, tree=validate_construction(r, got))
    except _OutOfBudget:
        return OracleResult(Verdict.BUDGET_EXHAUSTED, meter.nodes)
    return OracleResult(Verdict.ABSENT, meter.nodes)
