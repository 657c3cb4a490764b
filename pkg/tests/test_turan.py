import random
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tighttrees.generators import random_graph, random_partite, random_uniform
from tighttrees.hypergraph import build_hypergraph
from tighttrees.embedder import verify_embedding
from tighttrees.turan import (aks_cut_lower_bound, cut_subgraph, embed_tree_via_cut,
                              expected_r_cut_fraction, local_search_two_cut,
                              sample_r_cut_fractions, turan_threshold)
from tighttrees.tree import random_tight_tree, tight_path


def k(n):
    return build_hypergraph(2, [(u, v) for u in range(n) for v in range(u + 1, n)])


def brute_max_cut(G):
    best = 0
    for sides in product((0, 1), repeat=G.n):
        best = max(best, sum(sides[u] != sides[v] for u, v in G.edges))
    return best


def test_threshold_examples():
    assert turan_threshold(8, 3) == 12
    assert turan_threshold(10, 4) == Fraction(45, 2)
    assert turan_threshold(5, 1) == 0
    with pytest.raises(ValueError):
        turan_threshold(0, 2)


def test_aks_examples():
    assert aks_cut_lower_bound(12, 3) == 8
    assert aks_cut_lower_bound(12, 4) == 8
    assert aks_cut_lower_bound(0, 5) == 0


def test_small_cuts():
    assert local_search_two_cut(build_hypergraph(2, [(0, 1)])).size == 1
    assert local_search_two_cut(k(5)).size == 6 == brute_max_cut(k(5))


def test_bipartite_cut_is_fixed_point(k23):
    cut = local_search_two_cut(k23)
    assert cut.size == 6


def test_cut_is_deterministic():
    G = k(6)
    assert local_search_two_cut(G, seed=3) == local_search_two_cut(G, seed=3)


@given(st.integers(2, 9), st.integers(0, 2**32))
@settings(max_examples=100, deadline=None)
def test_local_optimum_keeps_half_degree(n, seed):
    rnd = random.Random(seed)
    G = random_graph(rnd, n, rnd.randint(0, n * (n - 1) // 2))
    cut = local_search_two_cut(G, seed, restarts=2)
    deg = [0] * n
    for u, v in G.edges:
        deg[u] += 1
        deg[v] += 1
    assert all(2 * cut.crossing[v] >= deg[v] for v in range(n))
    assert 2 * cut.size >= G.m
    B = cut_subgraph(G, cut)
    assert B.m == cut.size and B.partition == cut.sides


def test_pipeline_examples(triangle):
    res = embed_tree_via_cut(k(5), tight_path(2, 3))
    assert res.verdict == "found" and res.trigger and not res.used_fallback
    assert verify_embedding(k(5), tight_path(2, 3), res.embedding.mapping)
    single = build_hypergraph(2, [(0, 1)])
    assert embed_tree_via_cut(single, tight_path(2, 1)).verdict == "found"
    res = embed_tree_via_cut(triangle, tight_path(2, 3))
    assert res.verdict == "inconclusive" and res.used_fallback
    assert res.as_json()["oracle_verdict"] == "absent"


@given(st.integers(4, 10), st.integers(1, 5), st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_pipeline_above_threshold(n, t, seed):
    rnd = random.Random(seed)
    thr = turan_threshold(n, t)
    m = min(n * (n - 1) // 2, int(thr) + 1 + rnd.randint(0, 5))
    G = random_uniform(rnd, 2, n, m)
    T = random_tight_tree(2, t, seed)
    res = embed_tree_via_cut(G, T, seed, restarts=4)
    if G.m > thr:
        assert res.verdict == "found"
        assert verify_embedding(G, T, res.embedding.mapping)


def test_expected_fractions():
    assert expected_r_cut_fraction(2) == Fraction(1, 2)
    assert expected_r_cut_fraction(3) == Fraction(2, 9)
    assert expected_r_cut_fraction(4) == Fraction(3, 32)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_monte_carlo_expectation(r):
    H = random_uniform(random.Random(r), r, 9, 20)
    draws = sample_r_cut_fractions(H, 20000, seed=r)
    mu = float(expected_r_cut_fraction(r))
    se = draws.std(ddof=1) / np.sqrt(len(draws))
    assert abs(draws.mean() - mu) <= 4 * se


def test_sample_fraction_exact_on_partite_edge(edge3):
    draws = sample_r_cut_fractions(edge3, 5000, seed=1)
    assert set(np.unique(draws)) <= {0.0, 1.0}
    with pytest.raises(ValueError):
        sample_r_cut_fractions(build_hypergraph(2, [], n=3), 10)


def test_pipeline_rejects_hypergraphs(edge3):
    with pytest.raises(ValueError):
        embed_tree_via_cut(edge3, tight_path(3, 1))


def test_random_partite_cut_uses_crossing():
    G = random_partite(random.Random(0), [4, 4], 0.7)
    cut = local_search_two_cut(G)
    assert cut.size == G.m
