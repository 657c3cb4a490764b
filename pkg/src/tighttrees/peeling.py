"""Codegree peeling of r-partite r-graphs.

Given per-class targets ``t_1..t_r`` with ``sum(t) == t + r - 1``, classes of
the host are paired with the targets (largest avoiding-shadow count gets the
smallest target), then every shadow set S missing class i whose codegree is
positive but below its target has all edges through it deleted, until no such
S is left.  If the host has more than ``(t-1)/r * |shadow|`` edges the result
is never empty.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .hypergraph import Edge, Hypergraph, HypergraphError, NoPartition, avoiding_shadow_counts
from .tree import TightTree, canonical_partition


class NotBipartite(HypergraphError):
    pass


@dataclass(frozen=True)
class Thresholds:
    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values or any(v < 1 for v in self.values):
            raise ValueError(f"thresholds must be positive integers, got {self.values}")

    @property
    def r(self) -> int:
        return len(self.values)

    @property
    def t(self) -> int:
        return sum(self.values) - (self.r - 1)


def make_thresholds(T: TightTree) -> Thresholds:
    return Thresholds(canonical_partition(T).sizes)


@dataclass(frozen=True)
class PeelingPlan:
    """Pairing of host classes with thresholds.

    ``tree_to_host[k]`` is the host class receiving threshold ``k``;
    ``host_threshold[c]`` is the codegree target for sets missing host class c.
    ``pairs`` lists ``(host class, threshold index)`` in the proof's order
    (thresholds ascending, h descending), and ``deltas``/``i_star`` follow the
    same order.
    """
    thresholds: Thresholds
    h: tuple[int, ...]
    tree_to_host: tuple[int, ...]
    host_threshold: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    deltas: tuple[Fraction, ...]
    i_star: int


def assign_labels(H: Hypergraph, thresholds: Thresholds) -> PeelingPlan:
    if H.partition is None:
        raise NoPartition("peeling needs an r-partite host")
    if thresholds.r != H.r:
        raise ValueError(f"{thresholds.r} thresholds for an {H.r}-graph")
    h = avoiding_shadow_counts(H)
    tv = thresholds.values
    by_threshold = sorted(range(H.r), key=lambda k: (tv[k], k))
    by_h = sorted(range(H.r), key=lambda c: (-h[c], c))
    pairs = tuple(zip(by_h, by_threshold))

    tree_to_host = [0] * H.r
    host_threshold = [0] * H.r
    for c, k in pairs:
        tree_to_host[k] = c
        host_threshold[c] = tv[k]
    mean = Fraction(thresholds.t + H.r - 1, H.r)
    deltas = tuple(tv[k] - mean for _, k in pairs)
    i_star = sum(1 for d in deltas if d <= 0)
    return PeelingPlan(thresholds, h, tuple(tree_to_host), tuple(host_threshold),
                       pairs, deltas, i_star)


@dataclass(frozen=True)
class PeelStep:
    S: Edge
    avoids: int | None
    removed: tuple[Edge, ...]

    def as_json(self) -> dict:
        return {"S": list(self.S), "avoids": self.avoids,
                "removed": [list(e) for e in self.removed]}


@dataclass
class PeelResult:
    edges: frozenset[Edge]
    trace: list[PeelStep] = field(default_factory=list)

    @property
    def emptied(self) -> bool:
        return not self.edges

    def subgraph(self, H: Hypergraph) -> Hypergraph:
        return H.with_edges(self.edges)


def _peel(H: Hypergraph, need: Callable[[Edge], int], key: Callable[[Edge], tuple],
          rng: random.Random | None) -> PeelResult:
    # need(S): codegree target; key(S): worklist ordering and trace class
    index = H.index.copy()
    alive = set(H.edges)
    trace: list[PeelStep] = []

    def violated(s: Edge) -> bool:
        comp = index.completions.get(s)
        return comp is not None and len(comp) < need(s)

    pending = [key(s) + (s,) for s in index.completions if violated(s)]
    if rng is None:
        heapq.heapify(pending)
    else:
        pending = set(pending)

    while pending:
        if rng is None:
            item = heapq.heappop(pending)
        else:
            item = rng.choice(sorted(pending))
            pending.discard(item)
        s = item[-1]
        if not violated(s):
            continue
        removed = tuple(sorted(tuple(sorted(s + (v,))) for v in index.completions[s]))
        for e in removed:
            alive.discard(e)
            index.remove_edge(e)
        trace.append(PeelStep(s, item[0] if len(item) > 1 else None, removed))
        for e in removed:
            for k in range(len(e)):
                s2 = e[:k] + e[k + 1:]
                if violated(s2):
                    new = key(s2) + (s2,)
                    if rng is None:
                        heapq.heappush(pending, new)
                    else:
                        pending.add(new)
    return PeelResult(frozenset(alive), trace)


def peel(H: Hypergraph, plan: PeelingPlan, rng: random.Random | None = None) -> PeelResult:
    """Delete edges through under-covered shadow sets until none remain.

    With ``rng=None`` the smallest violated ``(class, S)`` is handled first;
    otherwise a uniformly random violated set is picked at every step.
    """
    target = plan.host_threshold
    avoided = H.avoided_class
    return _peel(H, lambda s: target[avoided(s)], lambda s: (avoided(s),), rng)


def peel_uniform(H: Hypergraph, threshold: int, rng: random.Random | None = None) -> PeelResult:
    """Peel with the same codegree target for every shadow set (no classes)."""
    return _peel(H, lambda s: threshold, lambda s: (), rng)


def check_codegree_condition(Hp: Hypergraph, plan: PeelingPlan) -> bool:
    target = plan.host_threshold
    return all(len(comp) >= target[Hp.avoided_class(s)]
               for s, comp in Hp.index.completions.items())


def exceeds_density_bound(H: Hypergraph, t: int) -> bool:
    """``|E(H)| > (t-1)/r * |shadow(H)|``, compared exactly."""
    return H.r * H.m > (t - 1) * len(H.index)


def deletion_ledger_holds(H: Hypergraph, plan: PeelingPlan, result: PeelResult) -> bool:
    """Check the counting behind the emptiness argument on an actual trace.

    Each shadow set is used at most once, removes at most ``t_i - 1`` edges,
    and in total ``|E(H)| <= |E| + sum (t_i - 1) h_i``.
    """
    seen = set()
    for step in result.trace:
        if step.S in seen or not 1 <= len(step.removed) <= plan.host_threshold[step.avoids] - 1:
            return False
        seen.add(step.S)
    if len(result.edges) + sum(len(s.removed) for s in result.trace) != H.m:
        return False
    slack = sum((plan.host_threshold[c] - 1) * plan.h[c] for c in range(H.r))
    return H.m <= len(result.edges) + slack


def bipartite_min_degree_subgraph(G: Hypergraph, t1: int, t2: int,
                                  rng: random.Random | None = None) -> PeelResult:
    """Subgraph where one side has minimum degree t1 and the other t2.

    Nonempty whenever the average degree of G exceeds ``t1 + t2 - 2``.
    """
    if G.r != 2 or G.partition is None:
        raise NotBipartite("expected a bipartite graph with a recorded bipartition")
    return peel(G, assign_labels(G, Thresholds((t1, t2))), rng)


def vertex_degrees(edges: Sequence[Edge], n: int) -> list[int]:
    deg = [0] * n
    for e in edges:
        for v in e:
            deg[v] += 1
    return deg
