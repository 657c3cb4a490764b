"""Readers and writers for ``.rhg`` hypergraphs and ``.ttree`` trees.

``.rhg`` layout::

    # free comments
    # labels: a b c ...        (optional, original vertex names in id order)
    r n m
    classes c_0 ... c_{n-1}     (optional)
    v v v                       (m edge lines)

Writing then reading a file gives back the same text.
"""

from __future__ import annotations

import json
from pathlib import Path

from .hypergraph import Hypergraph, build_hypergraph
from .tree import TightTree, validate_construction

LABELS = "labels:"


class FormatError(ValueError):
    pass


def format_rhg(H: Hypergraph) -> str:
    lines = [f"# {c}" if c else "#" for c in H.comments]
    if H.labels is not None:
        lines.append(f"# {LABELS} " + " ".join(H.labels))
    lines.append(f"{H.r} {H.n} {H.m}")
    if H.partition is not None:
        lines.append("classes " + " ".join(map(str, H.partition)))
    name = (lambda v: H.labels[v]) if H.labels is not None else str
    for e in H.edges:
        lines.append(" ".join(name(v) for v in e))
    return "\n".join(lines) + "\n"


def parse_rhg(text: str) -> Hypergraph:
    comments: list[str] = []
    labels: list[str] | None = None
    data: list[list[str]] = []
    for raw in text.splitlines():
        body, hash_, note = raw.partition("#")
        if hash_ and not data and not body.strip():
            note = note[1:] if note.startswith(" ") else note
            if note.startswith(LABELS):
                labels = note[len(LABELS):].split()
            else:
                comments.append(note)
        if body.strip():
            data.append(body.split())
    if not data:
        raise FormatError("missing 'r n m' header")
    try:
        r, n, m = (int(x) for x in data[0])
    except ValueError as exc:
        raise FormatError(f"bad header line {' '.join(data[0])!r}") from exc
    rest = data[1:]
    partition = None
    if rest and rest[0][0] == "classes":
        try:
            partition = [int(x) for x in rest[0][1:]]
        except ValueError as exc:
            raise FormatError("class labels must be integers") from exc
        rest = rest[1:]
    if len(rest) != m:
        raise FormatError(f"header announces {m} edges, found {len(rest)}")

    if labels is None and not all(tok.isdigit() for line in rest for tok in line):
        labels = []
        for line in rest:
            for tok in line:
                if tok not in labels:
                    labels.append(tok)
        if len(labels) != n:
            raise FormatError(f"{len(labels)} distinct names for {n} vertices; "
                              f"add a '# {LABELS}' line naming every vertex")
    if labels is not None:
        if len(labels) != n or len(set(labels)) != n:
            raise FormatError(f"need {n} distinct vertex labels")
        ids = {name: k for k, name in enumerate(labels)}
        try:
            edges = [[ids[tok] for tok in line] for line in rest]
        except KeyError as exc:
            raise FormatError(f"unknown vertex {exc.args[0]!r}") from exc
    else:
        edges = [[int(tok) for tok in line] for line in rest]
    return build_hypergraph(r, edges, partition, n=n, labels=labels, comments=comments)


def read_rhg(path) -> Hypergraph:
    return parse_rhg(Path(path).read_text())


def write_rhg(H: Hypergraph, path) -> None:
    Path(path).write_text(format_rhg(H))


def tree_to_json(T: TightTree) -> dict:
    return {"r": T.r, "root": list(T.root),
            "steps": [{"edge": list(s.edge), "new": s.new, "witness": s.witness}
                      for s in T.steps]}


def tree_from_json(obj: dict) -> TightTree:
    try:
        return validate_construction(obj["r"], [obj["root"]] + list(obj["steps"]))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed tree document: {exc}") from exc


def format_ttree(T: TightTree) -> str:
    return json.dumps(tree_to_json(T)) + "\n"


def read_ttree(path) -> TightTree:
    return tree_from_json(json.loads(Path(path).read_text()))


def write_ttree(T: TightTree, path) -> None:
    Path(path).write_text(format_ttree(T))
