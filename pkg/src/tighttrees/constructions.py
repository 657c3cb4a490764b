"""Lower-bound r-partite hosts that avoid balanced tight trees.

Class i is split into a small part of size ``a = (t+1)/r - 1`` and a large
part of size ``b``; an edge takes exactly one vertex from a small part and
the rest from large parts.  A tight tree can never mix the small and large
part of one class, so every class of an embedded tree has at most ``a < (t+1)/r``
vertices on the small side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .hypergraph import Hypergraph, build_hypergraph


class InvalidParams(ValueError):
    pass


class OutOfValidity(ValueError):
    pass


@dataclass(frozen=True)
class ConstructionParams:
    r: int
    t: int
    b: int

    def __post_init__(self):
        if self.r < 2 or self.t < 1:
            raise InvalidParams("need r >= 2 and t >= 1")
        if (self.t + 1) % self.r:
            raise InvalidParams(f"r={self.r} does not divide t+1={self.t + 1}")
        if self.a < 1:
            raise InvalidParams(f"t+1={self.t + 1} must be at least 2r={2 * self.r}")
        if self.b < 1:
            raise InvalidParams("large parts need b >= 1")

    @classmethod
    def from_tuple(cls, r: int, t: int, a: int, b: int) -> ConstructionParams:
        p = cls(r, t, b)
        if p.a != a:
            raise InvalidParams(f"a must equal (t+1)/r - 1 = {p.a}, got {a}")
        return p

    @property
    def a(self) -> int:
        return (self.t + 1) // self.r - 1

    @property
    def gamma(self) -> Fraction:
        return Fraction(self.a, self.b)

    @property
    def epsilon(self) -> Fraction:
        return 1 - (1 + self.gamma) ** (1 - self.r)

    def vertex(self, cls_: int, small: bool, k: int) -> int:
        """Id of the k-th vertex of the small (or large) part of a class."""
        return cls_ * (self.a + self.b) + (k if small else self.a + k)

    @property
    def n(self) -> int:
        return self.r * (self.a + self.b)

    def partition(self) -> list[int]:
        return [v // (self.a + self.b) for v in range(self.n)]

    def blocks(self) -> list[int]:
        """Sub-part label per vertex: ``2*class`` for small, ``2*class+1`` for large."""
        return [2 * (v // (self.a + self.b)) + (v % (self.a + self.b) >= self.a)
                for v in range(self.n)]


def _edges_with_small_count(p: ConstructionParams, allowed) -> list[tuple[int, ...]]:
    edges = []
    for pattern in product((True, False), repeat=p.r):
        if not allowed(sum(pattern)):
            continue
        parts = [[p.vertex(i, small, k) for k in range(p.a if small else p.b)]
                 for i, small in enumerate(pattern)]
        edges.extend(product(*parts))
    return edges


def header(p: ConstructionParams, m: int, experimental: bool = False) -> list[str]:
    lines = [f"lower-bound construction r={p.r} t={p.t} a={p.a} b={p.b}",
             f"gamma={p.gamma} epsilon={p.epsilon} edges={m}"]
    if experimental:
        lines.append("experimental augmented variant")
    return lines


def lower_bound_graph(p: ConstructionParams) -> Hypergraph:
    edges = _edges_with_small_count(p, lambda k: k == 1)
    return build_hypergraph(p.r, edges, p.partition(), n=p.n,
                            comments=header(p, len(edges)))


def lower_bound_edge_count(p: ConstructionParams) -> tuple[int, Fraction]:
    """Edge count ``r*a*b**(r-1)`` and its ratio to ``sum_i prod_{l != i} |V_l|``."""
    count = p.r * p.a * p.b ** (p.r - 1)
    return count, Fraction(count, p.r * (p.a + p.b) ** (p.r - 1))


def augmented_lower_bound_graph(p: ConstructionParams) -> Hypergraph:
    """Add every edge meeting an odd number (at least 3) of small parts.

    No non-containment claim comes with this graph; check it with the oracle.
    """
    if p.r < 3:
        raise InvalidParams("the augmented construction needs r >= 3")
    edges = _edges_with_small_count(p, lambda k: k == 1 or (k >= 3 and k % 2 == 1))
    return build_hypergraph(p.r, edges, p.partition(), n=p.n,
                            comments=header(p, len(edges), experimental=True))


def grs_path_extremal(n: int, m: int, t: int) -> int:
    """Maximum edges of a bipartite graph on n+m vertices without a t-edge path.

    Valid for odd ``t <= m + 1`` and ``n >= m >= 1``.
    """
    if t % 2 == 0 or t > m + 1 or not n >= m >= 1:
        raise OutOfValidity(f"formula stated only for odd t <= m+1 and n >= m >= 1, got {(n, m, t)}")
    return (t - 1) * (n + m - t + 1) // 2
