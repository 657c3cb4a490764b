import random
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_contains
from tighttrees.embedder import (Embedding, Inconclusive, TreeHostArityMismatch, embed,
                                 greedy_embed_nonpartite, verify_embedding)
from tighttrees.generators import random_dense_partite, random_partite, random_sizes_for, random_uniform
from tighttrees.hypergraph import build_hypergraph
from tighttrees.oracle import contains_tree
from tighttrees.peeling import exceeds_density_bound
from tighttrees.tree import random_tight_tree, tight_path


def complete_partite(sizes):
    part = [c for c, k in enumerate(sizes) for _ in range(k)]
    classes = [[v for v, c in enumerate(part) if c == i] for i in range(len(sizes))]
    return build_hypergraph(len(sizes), list(product(*classes)), part)


def test_single_edge_into_single_edge(edge3):
    got = embed(edge3, tight_path(3, 1))
    assert isinstance(got, Embedding)
    assert got.mapping == {0: 0, 1: 1, 2: 2}


def test_path_into_k23(k23):
    T = tight_path(2, 3)
    assert exceeds_density_bound(k23, 3)  # 6 > (2/2) * 5
    got = embed(k23, T)
    assert isinstance(got, Embedding)
    assert verify_embedding(k23, T, got.mapping)
    assert contains_tree(k23, T).found
    assert got.as_json() == {str(k): v for k, v in got.mapping.items()}


def test_tight_3_path_into_complete_tripartite():
    T = tight_path(3, 3)
    H = complete_partite([2, 2, 2])
    assert H.m == 8 and len(H.index) == 12
    assert not exceeds_density_bound(H, 3)  # 8 is not above (2/3) * 12
    got = embed(H, T)
    if isinstance(got, Embedding):
        assert contains_tree(H, T).found
    H = complete_partite([3, 2, 2])
    assert H.m == 12 and len(H.index) == 16
    assert exceeds_density_bound(H, 3)
    got = embed(H, T)
    assert isinstance(got, Embedding) and verify_embedding(H, T, got.mapping)
    assert contains_tree(H, T).found


def test_inconclusive_below_bound():
    M = build_hypergraph(2, [(0, 2), (1, 3)], [0, 0, 1, 1])
    got = embed(M, tight_path(2, 3))
    assert isinstance(got, Inconclusive) and got.peel.emptied


def test_arity_mismatch(k23):
    with pytest.raises(TreeHostArityMismatch):
        embed(k23, tight_path(3, 2))


def test_nonpartite_single_edge(triangle):
    got = greedy_embed_nonpartite(triangle, tight_path(2, 1))
    assert isinstance(got, Embedding)
    empty = build_hypergraph(2, [], n=3)
    assert isinstance(greedy_embed_nonpartite(empty, tight_path(2, 1)), Inconclusive)


def test_nonpartite_triangle(triangle):
    got = greedy_embed_nonpartite(triangle, tight_path(2, 2))
    assert isinstance(got, Embedding) and verify_embedding(triangle, tight_path(2, 2), got.mapping)
    P3 = tight_path(2, 3)
    assert isinstance(greedy_embed_nonpartite(triangle, P3), Inconclusive)
    assert not brute_contains(triangle.edges, 3, P3.edges)


def test_verify_embedding(edge3, k23):
    T = tight_path(3, 1)
    assert verify_embedding(edge3, T, {0: 2, 1: 0, 2: 1})
    assert not verify_embedding(edge3, T, {0: 0, 1: 0, 2: 1})
    assert not verify_embedding(edge3, T, {0: 0, 1: 1})
    P3 = tight_path(2, 3)
    assert verify_embedding(k23, P3, embed(k23, P3).mapping)


@st.composite
def dense_pairs(draw):
    r = draw(st.integers(2, 4))
    t = draw(st.integers(1, (6, 5, 4)[r - 2]))
    seed = draw(st.integers(0, 2**32))
    rnd = random.Random(seed)
    T = random_tight_tree(r, t, rnd.getrandbits(32))
    H = random_dense_partite(rnd, random_sizes_for(rnd, r, t, (7, 6, 5)[r - 2]), t)
    return T, H


@given(dense_pairs())
@settings(max_examples=200, deadline=None)
def test_complete_above_bound(pair):
    T, H = pair
    got = embed(H, T)  # also asserts the per-class occupancy bound while placing
    assert isinstance(got, Embedding)
    assert verify_embedding(H, T, got.mapping)
    assert len(got.host_edges) == T.t and set(got.host_edges) <= H.edge_set


@given(st.integers(2, 3), st.integers(1, 4), st.integers(0, 2**32))
@settings(max_examples=150, deadline=None)
def test_sound_and_agrees_with_oracle(r, t, seed):
    rnd = random.Random(seed)
    T = random_tight_tree(r, t, rnd.getrandbits(32))
    H = random_partite(rnd, [rnd.randint(1, 3) for _ in range(r)], rnd.random())
    got = embed(H, T)
    truth = brute_contains(H.edges, H.n, T.edges)
    assert contains_tree(H, T).found == truth
    if isinstance(got, Embedding):
        assert verify_embedding(H, T, got.mapping) and truth
    elif exceeds_density_bound(H, t):
        pytest.fail("inconclusive above the density bound")


@given(st.integers(2, 3), st.integers(1, 3), st.integers(0, 2**32))
@settings(max_examples=100, deadline=None)
def test_nonpartite_greedy_sound(r, t, seed):
    rnd = random.Random(seed)
    T = random_tight_tree(r, t, rnd.getrandbits(32))
    n = rnd.randint(r, 7)
    H = random_uniform(rnd, r, n, rnd.randint(0, comb(n, r)))
    got = greedy_embed_nonpartite(H, T)
    if isinstance(got, Embedding):
        assert verify_embedding(H, T, got.mapping)
    else:
        assert H.m <= (t - 1) * comb(n, r - 1)
