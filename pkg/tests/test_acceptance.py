"""Acceptance criteria, one test each.  Every test prints a single PASS/FAIL line."""

import time
from fractions import Fraction
from itertools import combinations

import pytest

from conftest import brute_contains
from tighttrees.constructions import grs_path_extremal
from tighttrees.experiments import run_suite
from tighttrees.tree import tight_path, tree_shapes


@pytest.fixture
def report_line(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
    return emit


def test_1_lemma_guarantee(report_line):
    start = time.perf_counter()
    rep = run_suite("lemma-guarantee", seed=0)
    secs = time.perf_counter() - start
    per_r = {r: sum(row["r"] == r for row in rep.rows) for r in (2, 3, 4)}
    ok = (rep.summary["violations"] == 0 and per_r == {2: 500, 3: 500, 4: 500}
          and all(row["t"] <= 8 and max(row["class_sizes"]) <= 8 for row in rep.rows)
          and secs < 60)
    report_line(1, ok, f"{rep.summary['instances']} instances, "
                       f"{rep.summary['violations']} violations, {secs:.1f}s")
    assert ok


def test_2_theorem_end_to_end(report_line):
    rep = run_suite("theorem-endtoend", seed=0)
    dense = all(row["dense"] for row in rep.rows)
    found = sum(row["verdict"] == "found" and row["verified"] for row in rep.rows)
    concur = sum(row["oracle"] == "found" for row in rep.rows)
    ok = len(rep.rows) == 300 and dense and found == 300 and concur == 100 and rep.passed
    report_line(2, ok, f"{found}/300 embedded and verified, oracle concurs on {concur}/100")
    assert ok


def test_3_lower_bound_certificates(report_line):
    start = time.perf_counter()
    rep = run_suite("lowerbound-certify", seed=0)
    secs = time.perf_counter() - start
    rows = [row for row in rep.rows if row["kind"] == "construction"]
    configs = {(row["r"], row["t"], row["a"], row["b"]) for row in rows}
    exact = all(row["edges"] == row["r"] * row["a"] * row["b"] ** (row["r"] - 1) for row in rows)
    absent = all(row["verdict"] == "absent" for row in rows)
    ok = (configs == {(2, 3, 1, 1), (2, 5, 2, 2), (3, 5, 1, 1), (3, 5, 1, 2)}
          and exact and absent and secs < 120)
    report_line(3, ok, f"{len(rows)} configurations, counts exact={exact}, "
                       f"all absent={absent}, {secs:.1f}s")
    assert ok


def test_4_grs_datum(report_line):
    formula = grs_path_extremal(2, 2, 3)
    P3 = tight_path(2, 3).edges
    pairs = [(u, v) for u in (0, 1) for v in (2, 3)]
    matching_free = not brute_contains([(0, 2), (1, 3)], 4, P3)
    three_contain = all(brute_contains(es, 4, P3) for es in combinations(pairs, 3))
    best = max(k for k in range(5) for es in combinations(pairs, k)
               if not brute_contains(es, 4, P3))
    suite_row = next(row for row in run_suite("lowerbound-certify").rows if row["kind"] == "grs")
    ok = formula == best == 2 and matching_free and three_contain and suite_row["ok"]
    report_line(4, ok, f"formula {formula}, exhaustive maximum {best}")
    assert ok


def test_5_turan_sweep(report_line):
    counts = [len(tree_shapes(2, t)) for t in (2, 3, 4)]
    rep = run_suite("turan-sweep", seed=0)
    found = sum(row["verdict"] == "found" for row in rep.rows)
    above = all(row["m"] > Fraction(row["threshold"]) and row["n"] <= 12 for row in rep.rows)
    expected = 200 * sum(counts)
    ok = counts == [1, 2, 3] and len(rep.rows) == expected and found == expected and above
    report_line(5, ok, f"{found}/{expected} found over {sum(counts)} trees, "
                       f"no-fallback fraction {rep.summary['no_fallback_fraction']}")
    assert ok


def test_6_cut_invariants(report_line):
    rep = run_suite("cut-expectation", seed=0)
    local = [row for row in rep.rows if row["kind"] == "local-search"]
    mc = [row for row in rep.rows if row["kind"] == "expectation"]
    ok = (len(local) == 200 and all(row["ok"] for row in local)
          and [row["r"] for row in mc] == [2, 3, 4]
          and all(row["samples"] == 100_000 and abs(float(row["z"])) <= 3 for row in mc))
    zs = ", ".join(f"r={row['r']} z={row['z']}" for row in mc)
    report_line(6, ok, f"local search ok on {sum(r['ok'] for r in local)}/200; {zs}")
    assert ok


def test_7_peel_confluence(report_line):
    rep = run_suite("peel-confluence", seed=0)
    confluent = sum(row["ok"] for row in rep.rows)
    ok = len(rep.rows) == 200 and confluent == 200
    report_line(7, ok, f"{confluent}/200 confluent with ledger bound")
    assert ok
