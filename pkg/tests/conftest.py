from __future__ import annotations

from itertools import combinations, permutations, product

import pytest

from tighttrees.hypergraph import build_hypergraph


@pytest.fixture
def k23():
    # V_1 = {0, 1}, V_2 = {2, 3, 4}
    return build_hypergraph(2, [(u, v) for u in (0, 1) for v in (2, 3, 4)], [0, 0, 1, 1, 1])


@pytest.fixture
def star15():
    return build_hypergraph(2, [(0, v) for v in range(1, 6)], [0, 1, 1, 1, 1, 1])


@pytest.fixture
def triangle():
    return build_hypergraph(2, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def edge3():
    return build_hypergraph(3, [(0, 1, 2)], [0, 1, 2])


# Brute-force references.  They work from raw edge lists only and never
# touch the shadow index, so they stay independent of the code under test.

def brute_shadow(r, edges):
    return {s for e in edges for s in combinations(sorted(e), r - 1)}


def brute_codegree(edges, s):
    return sum(1 for e in edges if set(s) <= set(e))


def brute_peel(r, n, edges, partition, target):
    """Naive fixed point over every (r-1)-subset of the vertex set."""
    alive = {tuple(sorted(e)) for e in edges}
    changed = True
    while changed:
        changed = False
        for s in combinations(range(n), r - 1):
            if partition is None:
                need = target
            else:
                classes = {partition[v] for v in s}
                if len(classes) != r - 1:
                    continue
                (missing,) = set(range(r)) - classes
                need = target[missing]
            c = brute_codegree(alive, s)
            if 0 < c < need:
                alive = {e for e in alive if not set(s) <= set(e)}
                changed = True
    return alive


def brute_contains(host_edges, host_n, tree_edges):
    """Try every injective map of tree vertices into host vertices."""
    verts = sorted({v for e in tree_edges for v in e})
    host = {tuple(sorted(e)) for e in host_edges}
    for image in permutations(range(host_n), len(verts)):
        phi = dict(zip(verts, image))
        if all(tuple(sorted(phi[v] for v in e)) in host for e in tree_edges):
            return True
    return False


def brute_proper_colorings(r, vertices, edges):
    """All maps vertex -> class with every edge rainbow."""
    out = []
    for colors in product(range(r), repeat=len(vertices)):
        col = dict(zip(vertices, colors))
        if all(len({col[v] for v in e}) == r for e in edges):
            out.append(col)
    return out
