"""Turán-type bounds for trees in graphs via a bipartite cut."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from .embedder import Embedding, LemmaViolation, embed, verify_embedding
from .hypergraph import Hypergraph, build_hypergraph
from .oracle import OracleResult, SearchBudget, Verdict, contains_tree
from .tree import TightTree


def turan_threshold(n: int, t: int) -> Fraction:
    """Edge count above which every n-vertex graph contains every t-edge tree."""
    if n < 1 or t < 1:
        raise ValueError("need n >= 1 and t >= 1")
    if t % 2:
        return (1 - Fraction(1, t + 1)) * (t - 1) * n
    return (1 - Fraction(1, t)) * (t - 1) * n


def aks_cut_lower_bound(m: int, t: int) -> Fraction:
    """Cut size guaranteed in m-edge graphs that miss some t-edge tree (reference only)."""
    if m < 0 or t <= 1:
        raise ValueError("need m >= 0 and t > 1")
    if t % 2:
        return Fraction(m, 2) + Fraction(m, 2 * t)
    return Fraction(m, 2) + Fraction(m, 2 * t - 2)


def expected_r_cut_fraction(r: int) -> Fraction:
    if r < 2:
        raise ValueError("need r >= 2")
    return Fraction(factorial(r), r ** r)


@dataclass(frozen=True)
class Cut:
    sides: tuple[int, ...]
    size: int
    crossing: tuple[int, ...]


def _cut_from_sides(G: Hypergraph, sides) -> Cut:
    crossing = [0] * G.n
    size = 0
    for u, v in G.edges:
        if sides[u] != sides[v]:
            size += 1
            crossing[u] += 1
            crossing[v] += 1
    return Cut(tuple(sides), size, tuple(crossing))


def local_search_two_cut(G: Hypergraph, seed=0, restarts: int = 32) -> Cut:
    """Best of ``restarts`` local searches from random bipartitions.

    A vertex with fewer than half its edges crossing switches sides until no
    such vertex remains, so every vertex ends with crossing degree >= deg/2.
    """
    if G.r != 2:
        raise ValueError("max-cut local search works on graphs (r = 2)")
    adj: list[list[int]] = [[] for _ in range(G.n)]
    for u, v in G.edges:
        adj[u].append(v)
        adj[v].append(u)
    best: Cut | None = None
    for k in range(max(1, restarts)):
        rng = random.Random(f"{seed}/{k}")
        sides = [rng.randrange(2) for _ in range(G.n)]
        cross = [sum(sides[w] != sides[u] for w in adj[u]) for u in range(G.n)]
        while True:
            bad = next((u for u in range(G.n) if 2 * cross[u] < len(adj[u])), None)
            if bad is None:
                break
            sides[bad] ^= 1
            cross[bad] = len(adj[bad]) - cross[bad]
            for w in adj[bad]:
                cross[w] += 1 if sides[w] != sides[bad] else -1
        cut = _cut_from_sides(G, sides)
        if best is None or (-cut.size, cut.sides) < (-best.size, best.sides):
            best = cut
    return best


def cut_subgraph(G: Hypergraph, cut: Cut) -> Hypergraph:
    """Bipartite graph of the crossing edges, with the cut sides as classes."""
    crossing = [e for e in G.edges if cut.sides[e[0]] != cut.sides[e[1]]]
    return build_hypergraph(2, crossing, cut.sides, n=G.n)


@dataclass
class PipelineResult:
    verdict: str
    cut: Cut
    trigger: bool
    threshold: Fraction
    used_fallback: bool
    embedding: Embedding | None = None
    oracle: OracleResult | None = None

    def as_json(self) -> dict:
        out = {"verdict": self.verdict, "cut_size": self.cut.size, "trigger": self.trigger,
               "threshold": str(self.threshold), "used_fallback": self.used_fallback}
        if self.oracle is not None:
            out["oracle_verdict"] = self.oracle.verdict.value
        if self.embedding is not None:
            out["embedding"] = self.embedding.as_json()
        return out


def embed_tree_via_cut(G: Hypergraph, T: TightTree, seed=0, restarts: int = 32,
                       budget: SearchBudget = SearchBudget()) -> PipelineResult:
    """Find T in G through a large cut, falling back to exhaustive search.

    When the crossing graph B has more than ``(t-1)/2`` edges per non-isolated
    vertex, the greedy embedder must succeed in B.
    """
    if T.r != 2 or G.r != 2:
        raise ValueError("the cut pipeline handles graph trees only")
    cut = local_search_two_cut(G, seed, restarts)
    B = cut_subgraph(G, cut)
    trigger = 2 * B.m > (T.t - 1) * len(B.non_isolated())
    threshold = turan_threshold(G.n, T.t)
    if trigger:
        got = embed(B, T)
        if not isinstance(got, Embedding) or not verify_embedding(G, T, got.mapping):
            raise LemmaViolation("cut graph above the density bound did not yield T")
        return PipelineResult("found", cut, trigger, threshold, False, got)
    oracle = contains_tree(G, T, budget)
    if oracle.verdict is Verdict.FOUND:
        if not verify_embedding(G, T, oracle.embedding.mapping):
            raise LemmaViolation("oracle returned an invalid embedding")
        return PipelineResult("found", cut, trigger, threshold, True, oracle.embedding, oracle)
    return PipelineResult("inconclusive", cut, trigger, threshold, True, None, oracle)


def sample_r_cut_fractions(H: Hypergraph, samples: int, seed=0) -> np.ndarray:
    """Crossing fraction of ``samples`` uniformly random r-cuts of H."""
    if H.m == 0:
        raise ValueError("need at least one edge")
    rng = np.random.default_rng(seed)
    edges = np.array(H.edges)
    target = np.arange(H.r)
    out = np.empty(samples)
    for lo in range(0, samples, 8192):
        hi = min(samples, lo + 8192)
        sides = rng.integers(0, H.r, size=(hi - lo, H.n))
        ordered = np.sort(sides[:, edges], axis=2)  # chunk x m x r
        out[lo:hi] = np.all(ordered == target, axis=2).mean(axis=1)
    return out
