"""Greedy embedding of tight trees into peeled hosts."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .hypergraph import Edge, Hypergraph, HypergraphError
from .peeling import (PeelingPlan, PeelResult, assign_labels, exceeds_density_bound,
                      make_thresholds, peel, peel_uniform)
from .tree import TightTree, canonical_partition


class TreeHostArityMismatch(HypergraphError):
    pass


class LemmaViolation(RuntimeError):
    """A mathematical guarantee failed; always a bug in this package."""


@dataclass
class Embedding:
    mapping: dict[int, int]
    host_edges: list[Edge] = field(default_factory=list)

    def as_json(self) -> dict[str, int]:
        return {str(k): v for k, v in sorted(self.mapping.items())}


@dataclass
class Inconclusive:
    reason: str
    peel: PeelResult | None = None


def verify_embedding(H: Hypergraph, T: TightTree, phi) -> bool:
    verts = T.vertices
    if any(v not in phi for v in verts):
        return False
    images = [phi[v] for v in verts]
    if len(set(images)) != len(images):
        return False
    return all(tuple(sorted(phi[v] for v in e)) in H.edge_set for e in T.edges)


def _check_arity(H: Hypergraph, T: TightTree) -> None:
    if H.r != T.r:
        raise TreeHostArityMismatch(f"tree is {T.r}-uniform but host is {H.r}-uniform")


def _greedy(Hp: Hypergraph, T: TightTree, root_map: dict[int, int],
            on_place=None) -> Embedding:
    phi = dict(root_map)
    used = set(phi.values())
    host_edges = [tuple(sorted(phi[v] for v in T.root))]
    for i, step in enumerate(T.steps, start=2):
        image = tuple(sorted(phi[v] for v in step.spine))
        free = sorted(Hp.index.completions.get(image, set()) - used)
        if not free:
            raise LemmaViolation(f"no unoccupied completion for tree edge {i}")
        if on_place is not None:
            on_place(step.new, free[0], phi)
        phi[step.new] = free[0]
        used.add(free[0])
        host_edges.append(tuple(sorted(image + (free[0],))))
    return Embedding(phi, host_edges)


def embed(H: Hypergraph, T: TightTree, check_occupancy: bool = True) -> Embedding | Inconclusive:
    """Embed T into the r-partite host H, or report that the density bound fails.

    Peels H with the class sizes of T as thresholds, then places the tree
    vertices in construction order, always taking the least free completion.
    """
    _check_arity(H, T)
    plan = assign_labels(H, make_thresholds(T))
    result = peel(H, plan)
    if result.emptied:
        if exceeds_density_bound(H, T.t):
            raise LemmaViolation("peeling emptied a host above the density bound")
        return Inconclusive("peeling emptied the host; density bound not met", result)

    Hp = result.subgraph(H)
    tree_class = canonical_partition(T).classes
    root_edge = Hp.edges[0]
    by_class = {H.partition[v]: v for v in root_edge}
    root_map = {v: by_class[plan.tree_to_host[tree_class[v]]] for v in T.root}

    on_place = None
    if check_occupancy:
        on_place = _occupancy_guard(H, plan, tree_class)
    return _greedy(Hp, T, root_map, on_place)


def _occupancy_guard(H: Hypergraph, plan: PeelingPlan, tree_class: dict[int, int]):
    def guard(v: int, image: int, phi: dict[int, int]):
        c = H.partition[image]
        k = tree_class[v]
        if plan.tree_to_host[k] != c:
            raise LemmaViolation(f"tree class {k} landed in host class {c}")
        occupied = sum(1 for w in phi.values() if H.partition[w] == c)
        if occupied >= plan.host_threshold[c]:
            raise LemmaViolation(f"class {c} already holds {occupied} tree vertices")
    return guard


def greedy_embed_nonpartite(H: Hypergraph, T: TightTree) -> Embedding | Inconclusive:
    """Weak greedy for arbitrary hosts: peel to codegree 0 or >= t, then embed."""
    _check_arity(H, T)
    result = peel_uniform(H, T.t)
    if result.emptied:
        if H.m > (T.t - 1) * comb(H.n, H.r - 1):
            raise LemmaViolation("uniform peeling emptied a host above (t-1)*C(n, r-1)")
        return Inconclusive("uniform peeling emptied the host", result)
    Hp = result.subgraph(H)
    root_map = dict(zip(T.root, Hp.edges[0]))
    return _greedy(Hp, T, root_map)
