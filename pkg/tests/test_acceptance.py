"""Acceptance suite: one PASS/FAIL line per criterion.

Every comparison is exact (integers or Fractions); the only numeric
tolerances are the wall-clock limits pinned below.
"""

from __future__ import annotations

import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from bookgraph.bipartite import lemma1_cut
from bookgraph.census import bn_inequality_check, book_number, triangle_count
from bookgraph.constructions import in_conjecture_range, mubayi_upper, s_graph
from bookgraph.search import SearchParams, classical_suite, enumerate_filtered, recheck_certificate, verify_conjecture
from bookgraph.surgery import apply_moves, t_prime, tilde_t_doubled, to_G1, to_G2

from conftest import labeled_classes, random_graph
from surgery_cases import feasible_instances

# pinned limits (seconds) and corpus parameters
C1_TIME_LIMIT = 10.0
C3_TIME_LIMIT = 60.0
C5_TIME_LIMIT = 300.0
C6_TIME_LIMIT = 3600.0
N_MAX_CONSTRUCTIONS = 60
CORPUS_SEED = 2024
CORPUS_SIZE = 10_000
CORPUS_N_MAX = 40
CORPUS_PROBS = (0.2, 0.5, 0.8)
SURGERY_SEED = 7
SURGERY_INSTANCES = 200


def report(capsys, number: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\nACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {detail}")


def _corpus():
    rng = random.Random(CORPUS_SEED)
    for i in range(CORPUS_SIZE):
        n = rng.randint(1, CORPUS_N_MAX)
        yield random_graph(rng, n, CORPUS_PROBS[i % len(CORPUS_PROBS)])


@pytest.mark.xfail(
    strict=True,
    reason="the stated book-number formula is false for b = 0 and for 4b = n, where the graph "
    "is the triangle-free balanced complete bipartite graph with book number 0",
)
def test_criterion_1_construction_exactness(capsys):
    start = time.perf_counter()
    edge_bad, tri_bad, book_bad = [], [], []
    cases = 0
    for n in range(0, N_MAX_CONSTRUCTIONS + 1):
        for b in range(0, n // 4 + 1):
            g = s_graph(b, n)
            cases += 1
            if g.m != n * n // 4:
                edge_bad.append((b, n))
            if triangle_count(g) != b * b * (n - 4 * b):
                tri_bad.append((b, n))
            if book_number(g) != max(b, -(-(n - 4 * b) // 2)):
                book_bad.append((b, n))
    elapsed = time.perf_counter() - start
    ok = not edge_bad and not tri_bad and not book_bad and elapsed < C1_TIME_LIMIT
    degenerate = all(b == 0 or 4 * b == n for b, n in book_bad)
    report(
        capsys,
        1,
        ok,
        f"{cases} (b,n) pairs in {elapsed:.2f}s; edges wrong {len(edge_bad)}, triangles wrong {len(tri_bad)}, "
        f"book formula wrong {len(book_bad)} (all degenerate b=0 or 4b=n: {degenerate}; "
        f"e.g. {book_bad[:4]})",
    )
    assert ok


def test_criterion_2_upper_constructions(capsys):
    bad, cases = [], 0
    for n in range(1, N_MAX_CONSTRUCTIONS + 1):
        for b in range(1, n):
            if not in_conjecture_range(b, n):
                continue
            cases += 1
            up = mubayi_upper(b, n)
            g = up.graph
            if n % 2 == 0:
                expected = b * b * (n - 4 * b) + n - 2 * (b + 1)
            else:
                expected = b * b * (n - 4 * b) + n - 2 * b - (b + 1)
            if g.m != n * n // 4 + 1 or book_number(g) > b + 1 or triangle_count(g) != expected:
                bad.append((b, n))
    ok = not bad and cases > 0
    report(capsys, 2, ok, f"{cases} legal (b,n) pairs with n <= {N_MAX_CONSTRUCTIONS}; failures {bad}")
    assert ok


def test_criterion_3_lemma1_guarantee(capsys):
    start = time.perf_counter()
    fails = 0
    for g in _corpus():
        r = lemma1_cut(g)
        assert isinstance(r.bound, Fraction)
        if not r.deleted_edges <= r.bound:
            fails += 1
    elapsed = time.perf_counter() - start
    ok = fails == 0 and elapsed < C3_TIME_LIMIT
    report(capsys, 3, ok, f"{CORPUS_SIZE} graphs, {fails} over the bound, {elapsed:.1f}s (limit {C3_TIME_LIMIT:.0f}s)")
    assert ok


def test_criterion_4_bollobas_nikiforov(capsys):
    fails, checked = [], 0
    for g in _corpus():
        checked += 1
        if not bn_inequality_check(g)[2]:
            fails.append(g)
    for n in range(1, 8):
        p = SearchParams(n=n, edge_threshold_mode="any", exclude_balanced_bipartite=False)
        for g in enumerate_filtered(p):
            checked += 1
            if not bn_inequality_check(g)[2]:
                fails.append(g)
    ok = not fails
    report(capsys, 4, ok, f"{checked} graphs (random corpus + all classes n <= 7), {len(fails)} violations")
    assert ok


def test_criterion_5_classical_suite(capsys):
    start = time.perf_counter()
    res = classical_suite(7)
    mismatches = []
    for n in range(1, 7):
        oracle = sum(1 for g in labeled_classes(n) if g.m >= n * n // 4 + 1)
        if res["classes_per_n"][str(n)] != oracle:
            mismatches.append((n, res["classes_per_n"][str(n)], oracle))
    elapsed = time.perf_counter() - start
    ok = (
        res["rademacher"]["status"] == "pass"
        and res["edwards"]["status"] == "pass"
        and not mismatches
        and elapsed < C5_TIME_LIMIT
    )
    report(
        capsys,
        5,
        ok,
        f"classes per n {res['classes_per_n']}; rademacher {res['rademacher']['status']}, "
        f"edwards {res['edwards']['status']}; count mismatches vs brute force {mismatches}; {elapsed:.1f}s",
    )
    assert ok


def test_criterion_6_conjecture_n9(capsys):
    start = time.perf_counter()
    cert = verify_conjecture(SearchParams(n=9, b_cap=2, edge_threshold_mode="floor_quarter"))
    elapsed = time.perf_counter() - start
    problems = recheck_certificate(cert)
    ok = not problems and elapsed < C6_TIME_LIMIT and cert.min_triangles_found is not None
    report(
        capsys,
        6,
        ok,
        f"min triangles {cert.min_triangles_found} vs bound {cert.conjectured_bound}, "
        f"witnesses {cert.extremal_witnesses}, unique S_(2,9) {cert.unique_extremal_is_s_graph}, "
        f"{cert.graphs_examined} classes, re-census problems {problems}, {elapsed:.2f}s",
    )
    assert ok


def test_criterion_7_surgery_contracts(capsys):
    counts = {"g1": 0, "g2": 0, "tilde": 0, "moves": 0}
    fails = []
    max_n = 0
    for idx, (g, p, b) in enumerate(feasible_instances(SURGERY_SEED, SURGERY_INSTANCES)):
        max_n = max(max_n, g.n)
        g1, _ = to_G1(g, p, b)
        if g1.m == g.m and p.is_complete_bipartite(g1):
            counts["g1"] += 1
        else:
            fails.append((idx, "g1"))
        g2, r2 = to_G2(g1, p, b)
        targets = all(
            sum(1 for u in p.A if g2.has_edge(u, v)) == b and sum(1 for u in p.B if g2.has_edge(u, v)) == b
            for v in p.C
        )
        if g2.m == g1.m and targets:
            counts["g2"] += 1
        else:
            fails.append((idx, "g2"))
        states = [g1] + apply_moves(g1, r2.moves)
        for h in states:
            if p.is_complete_bipartite(h):
                counts["tilde"] += 1
                if 2 * t_prime(h, p) < tilde_t_doubled(h, p):
                    fails.append((idx, "tilde"))
        mab = p.masks()[0] | p.masks()[1]
        mc = p.masks()[2]
        for i, mv in enumerate(r2.moves):
            before, mid, after = states[2 * i], states[2 * i + 1], states[2 * i + 2]
            v, w = mv.deleted
            expect_del = -((before.masks[v] & mab).bit_count() + (before.masks[w] & mab).bit_count())
            u, x = mv.added
            other = p.masks()[1] if u in p.A else p.masks()[0]
            expect_add = (
                -len(p.C)
                + 2 * (mid.masks[x] & other).bit_count()
                + (mid.masks[x] & mc).bit_count()
                + 2 * (mid.masks[u] & mc).bit_count()
                + 1
            )
            got_del = tilde_t_doubled(mid, p) - tilde_t_doubled(before, p)
            got_add = tilde_t_doubled(after, p) - tilde_t_doubled(mid, p)
            counts["moves"] += 1
            if (got_del, got_add) != (expect_del, expect_add):
                fails.append((idx, "move", i))
    ok = not fails and counts["g1"] == counts["g2"] == SURGERY_INSTANCES and max_n <= 24
    report(
        capsys,
        7,
        ok,
        f"{SURGERY_INSTANCES} instances (n <= {max_n}); G1 ok {counts['g1']}, G2 ok {counts['g2']}, "
        f"t' >= t~ checked on {counts['tilde']} complete states, {counts['moves']} moves recomputed; failures {fails[:5]}",
    )
    assert ok


CLI_RUNS = [
    (["construct", "s-graph", "--b", "2", "--n", "9"], False),
    (["construct", "mubayi-upper", "--b", "3", "--n", "15"], False),
    (["construct", "prism", "--sizes", "2,2,2,2,2,2"], False),
    (["verify", "--n", "9", "--b", "2"], True),
    (["verify", "--n", "8", "--b", "2", "--threshold-mode", "strict_quarter"], True),
    (["stress", "--n", "12", "--b", "2", "--iterations", "200000", "--restart-every", "25000", "--seed", "3"], True),
    (["suite", "--n-max", "6"], True),
]


def _cli(argv, stdin=None):
    r = subprocess.run(
        [sys.executable, "-m", "bookgraph", *argv], input=stdin, capture_output=True, text=True
    )
    return r.returncode, r.stdout


def test_criterion_8_determinism(capsys):
    diffs = []
    runs = 0
    for argv, parallel in CLI_RUNS:
        variants = [argv + ["--workers", "1"], argv + ["--workers", "4"]] if parallel else [argv]
        outputs = set()
        for v in variants:
            for _ in range(2):
                outputs.add(_cli(v))
                runs += 1
        if len(outputs) != 1 or next(iter(outputs))[0] not in (0, 2):
            diffs.append(" ".join(argv))
    g6 = "H]r@xwN\n"
    for argv in (["stats"], ["cut"], ["extract", "--c", "1/4", "--b-cap", "2"],
                 ["surgery", "--partition-from", "exact", "--b-cap", "2"]):
        outs = {_cli(argv, g6) for _ in range(2)}
        runs += 2
        if len(outs) != 1 or next(iter(outs))[0] != 0:
            diffs.append(" ".join(argv))
    ok = not diffs
    report(capsys, 8, ok, f"{runs} CLI executions, workers in {{1, 4}} where applicable; differing commands {diffs}")
    assert ok
