"""Tight r-trees given by their construction sequence.

A tree starts from a root edge; every later step adds an edge with exactly
one new vertex whose remaining r-1 vertices (the *spine*) lie inside an
earlier edge, the *witness*.  Witnesses are 1-based edge numbers, so the
root edge is edge 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, ...]


class TreeError(ValueError):
    """Invalid construction sequence; ``step`` is the 1-based edge number."""

    def __init__(self, msg: str, step: int | None = None):
        super().__init__(msg if step is None else f"step {step}: {msg}")
        self.step = step


class MalformedStep(TreeError):
    pass


class NewVertexReused(TreeError):
    pass


class SpineNotInWitness(TreeError):
    pass


class WitnessOutOfRange(TreeError):
    pass


@dataclass(frozen=True)
class Step:
    edge: Edge
    new: int
    witness: int

    @property
    def spine(self) -> Edge:
        return tuple(v for v in self.edge if v != self.new)


@dataclass(frozen=True)
class TightTree:
    r: int
    root: Edge
    steps: tuple[Step, ...]

    @property
    def t(self) -> int:
        return 1 + len(self.steps)

    @property
    def edges(self) -> list[Edge]:
        return [self.root] + [s.edge for s in self.steps]

    @property
    def vertices(self) -> list[int]:
        """Vertices in construction order: sorted root, then each new vertex."""
        return list(self.root) + [s.new for s in self.steps]

    def relabeled(self, perm: Mapping[int, int]) -> TightTree:
        steps = [(tuple(perm[v] for v in s.edge), perm[s.new], s.witness)
                 for s in self.steps]
        return validate_construction(self.r, [tuple(perm[v] for v in self.root)] + steps)


@dataclass(frozen=True)
class TreePartition:
    classes: dict[int, int]
    sizes: tuple[int, ...]

    @property
    def sorted_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(self.sizes))


def _as_step(raw) -> tuple[Iterable[int], int, int]:
    if isinstance(raw, Step):
        return raw.edge, raw.new, raw.witness
    if isinstance(raw, Mapping):
        return raw["edge"], raw["new"], raw["witness"]
    edge, new, witness = raw
    return edge, new, witness


def validate_construction(r: int, steps: Sequence) -> TightTree:
    """Check a construction sequence and return the tree.

    ``steps[0]`` is the root edge; every later entry is a :class:`Step`, a
    ``(edge, new, witness)`` triple or a mapping with those keys.
    """
    if r < 2:
        raise MalformedStep(f"uniformity must be at least 2, got {r}")
    if not steps:
        raise MalformedStep("construction needs a root edge")
    root = tuple(sorted(steps[0]))
    if len(root) != r or len(set(root)) != r:
        raise MalformedStep(f"root {root} is not an edge of {r} distinct vertices", 1)

    edges = [root]
    seen = set(root)
    out = []
    for i, raw in enumerate(steps[1:], start=2):
        try:
            edge, new, witness = _as_step(raw)
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedStep(f"cannot read step {raw!r}", i) from exc
        edge = tuple(sorted(edge))
        if len(edge) != r or len(set(edge)) != r:
            raise MalformedStep(f"edge {edge} is not {r} distinct vertices", i)
        if new not in edge:
            raise MalformedStep(f"new vertex {new} not in edge {edge}", i)
        if new in seen:
            raise NewVertexReused(f"vertex {new} already appears in the tree", i)
        if not 1 <= witness < i:
            raise WitnessOutOfRange(f"witness {witness} not among edges 1..{i - 1}", i)
        spine = set(edge) - {new}
        if not spine <= set(edges[witness - 1]):
            raise SpineNotInWitness(
                f"{sorted(spine)} is not contained in witness edge {edges[witness - 1]}", i)
        seen.add(new)
        edges.append(edge)
        out.append(Step(edge, new, witness))
    return TightTree(r, root, tuple(out))


def canonical_partition(T: TightTree) -> TreePartition:
    # root vertex k gets class k; a new vertex takes the class missing from its spine
    classes = {v: k for k, v in enumerate(T.root)}
    everything = set(range(T.r))
    for s in T.steps:
        (c,) = everything - {classes[v] for v in s.spine}
        classes[s.new] = c
    sizes = [0] * T.r
    for c in classes.values():
        sizes[c] += 1
    return TreePartition(classes, tuple(sizes))


def random_tight_tree(r: int, t: int, seed=None) -> TightTree:
    """Sample a tree with t edges on vertices ``0..t+r-2``.

    Each step picks a uniformly random earlier edge and drops a uniformly
    random vertex of it to get the spine.
    """
    if r < 2 or t < 1:
        raise ValueError("need r >= 2 and t >= 1")
    rng = random.Random(seed)
    edges = [tuple(range(r))]
    steps: list = [edges[0]]
    for i in range(2, t + 1):
        w = rng.randrange(len(edges))
        spine = list(edges[w])
        del spine[rng.randrange(r)]
        new = r + i - 2
        edge = tuple(sorted(spine + [new]))
        edges.append(edge)
        steps.append((edge, new, w + 1))
    return validate_construction(r, steps)


def tight_path(r: int, t: int) -> TightTree:
    if r < 2 or t < 1:
        raise ValueError("need r >= 2 and t >= 1")
    steps: list = [tuple(range(r))]
    for i in range(1, t):
        steps.append((tuple(range(i, i + r)), i + r - 1, i))
    return validate_construction(r, steps)


def canonical_form(r: int, edges: Sequence[Edge]) -> tuple[Edge, ...]:
    """Isomorphism invariant by brute force over all vertex relabelings."""
    verts = sorted({v for e in edges for v in e})
    best = None
    for image in permutations(range(len(verts))):
        perm = dict(zip(verts, image))
        form = tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in edges))
        if best is None or form < best:
            best = form
    return best


def tree_shapes(r: int, t: int) -> list[TightTree]:
    """One tree per isomorphism class of tight r-trees with t edges.

    Exhausts construction sequences on vertices ``0..t+r-2`` and keeps the
    first sequence of each shape.  Only meant for a handful of vertices.
    """
    shapes: dict[tuple, TightTree] = {}

    def grow(steps: list, edges: list[Edge]):
        if len(edges) == t:
            tree = validate_construction(r, steps)
            shapes.setdefault(canonical_form(r, edges), tree)
            return
        new = r + len(edges) - 1
        for w, f in enumerate(edges):
            for drop in f:
                edge = tuple(sorted([v for v in f if v != drop] + [new]))
                grow(steps + [(edge, new, w + 1)], edges + [edge])

    root = tuple(range(r))
    grow([root], [root])
    return [shapes[k] for k in sorted(shapes)]
