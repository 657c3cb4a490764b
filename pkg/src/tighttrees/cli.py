"""Command line entry point.

Exit codes: 0 success or found, 1 absent/inconclusive/emptied, 2 usage or
input error, 3 a proved guarantee was violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io as tio
from .constructions import (ConstructionParams, InvalidParams, augmented_lower_bound_graph,
                            lower_bound_graph)
from .embedder import Embedding, LemmaViolation, embed, greedy_embed_nonpartite
from .experiments import SUITES, run_suite
from .hypergraph import HypergraphError, avoiding_shadow_counts
from .oracle import SearchBudget, contains_any_tight_tree, contains_tree
from .peeling import Thresholds, assign_labels, exceeds_density_bound, make_thresholds, peel
from .tree import TreeError, random_tight_tree, tight_path
from .turan import embed_tree_via_cut

OK, NEGATIVE, USAGE, VIOLATION = 0, 1, 2, 3


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _budget(args) -> SearchBudget:
    return SearchBudget(args.budget_nodes, args.budget_secs)


def cmd_gen_tree(args) -> int:
    _emit(tio.format_ttree(random_tight_tree(args.r, args.t, args.seed)), args.out)
    return OK


def cmd_gen_path(args) -> int:
    _emit(tio.format_ttree(tight_path(args.r, args.t)), args.out)
    return OK


def cmd_gen_extremal(args) -> int:
    p = ConstructionParams(args.r, args.t, args.b)
    if args.a is not None and args.a != p.a:
        raise InvalidParams(f"a is fixed to (t+1)/r - 1 = {p.a}")
    H = augmented_lower_bound_graph(p) if args.augmented else lower_bound_graph(p)
    _emit(tio.format_rhg(H), args.out)
    return OK


def cmd_shadow(args) -> int:
    H = tio.read_rhg(args.host)
    report = {"r": H.r, "n": H.n, "m": H.m, "shadow": len(H.index)}
    if H.partition is not None:
        report["avoiding"] = list(avoiding_shadow_counts(H))
    if args.sets:
        report["sets"] = [[list(s), len(H.index.completions[s])] for s in H.index.sets()]
    _emit(_json(report), args.out)
    return OK


def cmd_peel(args) -> int:
    H = tio.read_rhg(args.host)
    if args.thresholds:
        thresholds = Thresholds(tuple(int(x) for x in args.thresholds.split(",")))
    else:
        thresholds = make_thresholds(tio.read_ttree(args.tree))
    plan = assign_labels(H, thresholds)
    result = peel(H, plan)
    lines = [_json(step.as_json()) for step in result.trace]
    lines.append(_json({"surviving": [list(e) for e in sorted(result.edges)],
                        "emptied": result.emptied,
                        "host_classes": list(plan.host_threshold)}))
    _emit("".join(lines), args.out)
    if result.emptied:
        if exceeds_density_bound(H, thresholds.t):
            print("peeling emptied a host above the density bound", file=sys.stderr)
            return VIOLATION
        return NEGATIVE
    return OK


def cmd_embed(args) -> int:
    H = tio.read_rhg(args.host)
    T = tio.read_ttree(args.tree)
    if args.nonpartite or H.partition is None:
        got = greedy_embed_nonpartite(H, T)
    else:
        got = embed(H, T)
    if isinstance(got, Embedding):
        _emit(_json(got.as_json()), args.out)
        return OK
    print(f"inconclusive: {got.reason}", file=sys.stderr)
    return NEGATIVE


def cmd_oracle(args) -> int:
    H = tio.read_rhg(args.host)
    if args.tree:
        res = contains_tree(H, tio.read_ttree(args.tree), _budget(args))
        report = {"verdict": res.verdict.value, "nodes": res.nodes}
        if res.embedding is not None:
            report["embedding"] = res.embedding.as_json()
    else:
        res = contains_any_tight_tree(H, args.t, args.min_class, _budget(args))
        report = {"verdict": res.verdict.value, "nodes": res.nodes}
        if res.tree is not None:
            report["tree"] = tio.tree_to_json(res.tree)
    _emit(_json(report), args.out)
    return OK if res.found else NEGATIVE


def cmd_turan(args) -> int:
    G = tio.read_rhg(args.graph)
    T = tio.read_ttree(args.tree)
    res = embed_tree_via_cut(G, T, args.seed, args.restarts, _budget(args))
    _emit(_json(res.as_json()), args.out)
    return OK if res.verdict == "found" else NEGATIVE


def cmd_experiment(args) -> int:
    report = run_suite(args.suite, args.seed, args.scale, _budget(args), args.jobs,
                       args.timings, args.restarts)
    csv_path, json_path = report.write(args.out)
    summary = dict(report.summary, suite=report.suite, passed=report.passed,
                   csv=str(csv_path), json=str(json_path))
    sys.stdout.write(_json(summary))
    if report.passed:
        return OK
    return VIOLATION if report.build_stopping else NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tighttrees", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def budget_flags(p):
        p.add_argument("--budget-nodes", type=int, default=2_000_000)
        p.add_argument("--budget-secs", type=float, default=None)

    p = sub.add_parser("gen-tree", help="random tight tree (.ttree)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_tree)

    p = sub.add_parser("gen-path", help="tight path (.ttree)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_path)

    p = sub.add_parser("gen-extremal", help="lower-bound construction (.rhg)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--augmented", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_extremal)

    p = sub.add_parser("shadow", help="shadow size and per-class avoiding counts")
    p.add_argument("--host", required=True)
    p.add_argument("--sets", action="store_true", help="list every shadow set with its codegree")
    p.add_argument("--out")
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("peel", help="codegree peeling, trace as JSON lines")
    p.add_argument("--host", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--thresholds", help="comma separated, e.g. 2,2")
    group.add_argument("--tree", help="take thresholds from a tree's class sizes")
    p.add_argument("--out")
    p.set_defaults(func=cmd_peel)

    p = sub.add_parser("embed", help="greedy embedding of a tree")
    p.add_argument("--host", required=True)
    p.add_argument("--tree", required=True)
    p.add_argument("--nonpartite", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("oracle", help="exhaustive containment search")
    p.add_argument("--host", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--tree")
    group.add_argument("--t", type=int, help="search any tight tree with t edges")
    p.add_argument("--min-class", type=int, default=1)
    budget_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("turan", help="cut-then-embed pipeline for graph trees")
    p.add_argument("--graph", required=True)
    p.add_argument("--tree", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=32)
    budget_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_turan)

    p = sub.add_parser("experiment", help="run an experiment suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale", choices=("small", "medium"), default="small")
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="add a wall-clock column")
    p.add_argument("--out", default="reports")
    budget_flags(p)
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LemmaViolation as exc:
        print(f"guarantee violated: {exc}", file=sys.stderr)
        return VIOLATION
    except (HypergraphError, TreeError, tio.FormatError, InvalidParams,
            ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
