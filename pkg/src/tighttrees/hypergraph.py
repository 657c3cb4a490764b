"""r-uniform hypergraphs with an eagerly built shadow/codegree index.

Vertices are dense integer ids ``0..n-1``.  Edges are stored as sorted
tuples.  The shadow index maps every (r-1)-subset of an edge to the set of
vertices completing it to an edge, so ``len(index[S])`` is the codegree of S.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

Edge = tuple[int, ...]


class HypergraphError(ValueError):
    pass


class NonUniformEdge(HypergraphError):
    pass


class DuplicateEdge(HypergraphError):
    pass


class NotRPartite(HypergraphError):
    pass


class WrongArity(HypergraphError):
    pass


class NoPartition(HypergraphError):
    pass


def spines(edge: Edge) -> Iterable[tuple[Edge, int]]:
    """Yield ``(edge minus v, v)`` for every vertex v of a sorted edge."""
    for k, v in enumerate(edge):
        yield edge[:k] + edge[k + 1:], v


class ShadowIndex:
    """Map from each S in the shadow to the vertices completing S to an edge.

    Supports incremental edge deletion; a set whose codegree drops to zero
    leaves the index.
    """

    def __init__(self, r: int, edges: Iterable[Edge] = ()):
        self.r = r
        self.completions: dict[Edge, set[int]] = {}
        for e in edges:
            self.add_edge(e)

    def add_edge(self, edge: Edge) -> None:
        for s, v in spines(edge):
            self.completions.setdefault(s, set()).add(v)

    def remove_edge(self, edge: Edge) -> None:
        for s, v in spines(edge):
            comp = self.completions[s]
            comp.discard(v)
            if not comp:
                del self.completions[s]

    def copy(self) -> ShadowIndex:
        new = ShadowIndex(self.r)
        new.completions = {s: set(c) for s, c in self.completions.items()}
        return new

    def codegree(self, s: Sequence[int]) -> int:
        if len(s) != self.r - 1:
            raise WrongArity(f"expected a {self.r - 1}-set, got {tuple(s)}")
        comp = self.completions.get(tuple(sorted(s)))
        return len(comp) if comp else 0

    def __len__(self) -> int:
        return len(self.completions)

    def __contains__(self, s) -> bool:
        return tuple(sorted(s)) in self.completions

    def __iter__(self):
        return iter(self.completions)

    def sets(self) -> list[Edge]:
        return sorted(self.completions)


class Hypergraph:
    """A validated r-uniform hypergraph on vertices ``0..n-1``.

    ``partition`` (when present) gives each vertex a class in ``0..r-1`` and
    every edge meets each class exactly once.  ``labels`` keeps the original
    vertex names when the graph was read from a file with non-integer ids.
    """

    def __init__(self, r: int, n: int, edges: Iterable[Edge],
                 partition: Sequence[int] | None = None,
                 labels: Sequence[str] | None = None,
                 comments: Sequence[str] = ()):
        self.r = r
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(edges))
        self.edge_set = frozenset(self.edges)
        self.partition = tuple(partition) if partition is not None else None
        self.labels = tuple(labels) if labels is not None else None
        self.comments = tuple(comments)
        self.index = ShadowIndex(r, self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertex_class(self, v: int) -> int:
        if self.partition is None:
            raise NoPartition("hypergraph has no recorded r-partition")
        return self.partition[v]

    def avoided_class(self, s: Sequence[int]) -> int:
        """The unique class missed by an (r-1)-set of an r-partite graph."""
        if self.partition is None:
            raise NoPartition("hypergraph has no recorded r-partition")
        present = {self.partition[v] for v in s}
        (missing,) = set(range(self.r)) - present
        return missing

    def class_members(self, c: int) -> list[int]:
        if self.partition is None:
            raise NoPartition("hypergraph has no recorded r-partition")
        return [v for v in range(self.n) if self.partition[v] == c]

    def non_isolated(self) -> set[int]:
        return {v for e in self.edges for v in e}

    def with_edges(self, edges: Iterable[Edge]) -> Hypergraph:
        """Subhypergraph on the same vertex set and partition."""
        return Hypergraph(self.r, self.n, edges, self.partition, self.labels)

    def relabeled(self, perm: Sequence[int]) -> Hypergraph:
        """Copy with vertex v renamed to ``perm[v]``."""
        edges = [tuple(sorted(perm[v] for v in e)) for e in self.edges]
        partition = None
        if self.partition is not None:
            partition = [0] * self.n
            for v, c in enumerate(self.partition):
                partition[perm[v]] = c
        return Hypergraph(self.r, self.n, edges, partition)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.r, self.n, self.edges, self.partition, self.labels) == \
            (other.r, other.n, other.edges, other.partition, other.labels)

    def __repr__(self) -> str:
        return f"Hypergraph(r={self.r}, n={self.n}, m={self.m})"


def _bipartition(n: int, edges: Sequence[Edge]) -> list[int] | None:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    side = [-1] * n
    for start in range(n):
        if side[start] >= 0:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def build_hypergraph(r: int, edges: Iterable[Iterable[int]],
                     partition: Sequence[int] | None = None,
                     n: int | None = None,
                     labels: Sequence[str] | None = None,
                     comments: Sequence[str] = ()) -> Hypergraph:
    """Validate an edge list and return a :class:`Hypergraph`.

    If ``n`` is omitted it is one more than the largest vertex id.  Without a
    partition, a bipartition is searched for when ``r == 2``; for ``r >= 3``
    the partition stays absent unless supplied.
    """
    if r < 2:
        raise HypergraphError(f"uniformity must be at least 2, got {r}")
    canon: list[Edge] = []
    seen: set[Edge] = set()
    for raw in edges:
        e = tuple(sorted(raw))
        if len(e) != r or len(set(e)) != r:
            raise NonUniformEdge(f"edge {e} does not have {r} distinct vertices")
        if e in seen:
            raise DuplicateEdge(f"edge {e} listed twice")
        seen.add(e)
        canon.append(e)
    top = max((max(e) for e in canon), default=-1) + 1
    if n is None:
        n = max(top, len(partition) if partition is not None else 0)
    if top > n or any(min(e) < 0 for e in canon):
        raise HypergraphError(f"edge uses a vertex outside 0..{n - 1}")

    if partition is not None:
        partition = list(partition)
        if len(partition) != n:
            raise HypergraphError(f"partition has {len(partition)} labels for {n} vertices")
        if any(not 0 <= c < r for c in partition):
            raise HypergraphError(f"partition labels must lie in 0..{r - 1}")
        for e in canon:
            if len({partition[v] for v in e}) != r:
                raise NotRPartite(f"edge {e} has two vertices in one class")
    elif r == 2:
        partition = _bipartition(n, canon)
    return Hypergraph(r, n, canon, partition, labels, comments)


def shadow(H: Hypergraph) -> ShadowIndex:
    return H.index


def codegree(H: Hypergraph, s: Sequence[int]) -> int:
    return H.index.codegree(s)


def avoiding_shadow_counts(H: Hypergraph) -> tuple[int, ...]:
    """``h[i]`` = number of shadow sets of H that miss class i."""
    if H.partition is None:
        raise NoPartition("avoiding counts need an r-partition")
    h = [0] * H.r
    for s in H.index:
        h[H.avoided_class(s)] += 1
    return tuple(h)
