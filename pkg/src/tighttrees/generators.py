"""Random instances for tests and experiment suites."""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .hypergraph import Hypergraph, build_hypergraph
from .peeling import Thresholds, exceeds_density_bound


def partition_for(sizes: Sequence[int]) -> list[int]:
    return [c for c, k in enumerate(sizes) for _ in range(k)]


def random_partite(rng: random.Random, sizes: Sequence[int], p: float) -> Hypergraph:
    """Each of the ``prod(sizes)`` transversal r-sets is an edge with probability p."""
    part = partition_for(sizes)
    classes = [[v for v, c in enumerate(part) if c == i] for i in range(len(sizes))]
    edges = [e for e in product(*classes) if rng.random() < p]
    return build_hypergraph(len(sizes), edges, part, n=len(part))


def harmonic_mean(sizes: Sequence[int]) -> Fraction:
    """``r * |E| / |shadow|`` of the complete r-partite r-graph with these classes."""
    return Fraction(len(sizes)) / sum(Fraction(1, k) for k in sizes)


def random_composition(rng: random.Random, total: int, parts: int) -> tuple[int, ...]:
    """Uniform composition of ``total`` into ``parts`` positive integers."""
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    bounds = [0] + cuts + [total]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def random_dense_partite(rng: random.Random, sizes: Sequence[int], t: int,
                         tries: int = 50) -> Hypergraph:
    """Random r-partite host with more than ``(t-1)/r * |shadow|`` edges.

    Edge sets are resampled until the bound holds; the edge probability drifts
    towards 1 on failures, and the complete host always qualifies when the
    harmonic mean of the class sizes exceeds ``t - 1``.
    """
    hm = harmonic_mean(sizes)
    if hm <= t - 1:
        raise ValueError(f"class sizes {tuple(sizes)} cannot exceed the bound for t={t}")
    low = float(Fraction(t - 1) / hm)
    for k in range(tries):
        floor = low + (1 - low) * k / tries
        # squared uniform keeps most draws close to the bound
        H = random_partite(rng, sizes, floor + (1 - floor) * rng.random() ** 2)
        if exceeds_density_bound(H, t):
            return H
    return random_partite(rng, sizes, 1.0)


def random_lemma_instance(rng: random.Random, r: int, max_class: int = 8,
                          max_t: int = 8) -> tuple[Hypergraph, Thresholds]:
    """Dense r-partite host plus random thresholds summing to ``t + r - 1``."""
    sizes = [rng.randint(1, max_class) for _ in range(r)]
    t_cap = min(max_t, math.ceil(harmonic_mean(sizes)))
    t = rng.randint(1, t_cap)
    thresholds = Thresholds(random_composition(rng, t + r - 1, r))
    return random_dense_partite(rng, sizes, t), thresholds


def random_sizes_for(rng: random.Random, r: int, t: int, max_class: int) -> list[int]:
    """Class sizes in ``1..max_class`` whose complete host beats the bound for t."""
    if max_class <= t - 1:
        raise ValueError(f"classes of size <= {max_class} never exceed the bound for t={t}")
    while True:
        sizes = [rng.randint(1, max_class) for _ in range(r)]
        if harmonic_mean(sizes) > t - 1:
            return sizes


def random_graph(rng: random.Random, n: int, m: int) -> Hypergraph:
    pairs = list(combinations(range(n), 2))
    return build_hypergraph(2, rng.sample(pairs, m), n=n)


def random_uniform(rng: random.Random, r: int, n: int, m: int) -> Hypergraph:
    """m distinct random r-sets on n vertices (no partition)."""
    if m > math.comb(n, r):
        raise ValueError(f"only {math.comb(n, r)} distinct {r}-sets on {n} vertices")
    edges: set[tuple[int, ...]] = set()
    while len(edges) < m:
        edges.add(tuple(sorted(rng.sample(range(n), r))))
    return build_hypergraph(r, sorted(edges), n=n)
