"""Acceptance suite: one PASS/FAIL line per criterion (see the summary section of the pytest run)."""
import itertools
import time
from fractions import Fraction

import pytest

from cutspace.bench import random_corpus, run_bench
from cutspace.enumeration import (
    ordered_cut_enumeration,
    relevant_gus_p,
    relevant_gus_t,
    relevant_yeh,
)
from cutspace.generators import gluetree, gluetree_roots, k2m
from cutspace.gomory_hu import basis_from_tree, build_gomory_hu, min_cut_weight
from cutspace.graph import is_bond
from cutspace.oracle import (
    all_cuts,
    all_minimum_bases,
    min_basis_greedy,
    relevant_by_greedy,
    relevant_by_minpair,
)
from cutspace.pqdag import ClosedSetEnumerator, build_pqdag

from helpers import brute, corpus, fixtures

DELAY_CONSTANT = 8


@pytest.fixture(scope="module")
def full_corpus():
    return list(fixtures().values()) + corpus(300, 7, seed=2024)


def sides(cuts):
    return frozenset(c.side for c in cuts)


def test_ac01_oracle_equivalence(full_corpus, report):
    t0 = time.perf_counter()
    bad = 0
    for g in full_corpus:
        cat = all_cuts(g)
        ref = sides(relevant_by_minpair(cat))
        got = [sides(relevant_by_greedy(cat)), relevant_gus_t(g).sides(),
               relevant_gus_p(g).sides(), relevant_yeh(g).sides()]
        bad += any(s != ref for s in got)
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < 120
    report("AC1 oracle equivalence", ok, f"{len(full_corpus)} graphs, {bad} mismatches, {elapsed:.1f}s")
    assert ok


def test_ac02_gomory_hu_validity(report):
    t0 = time.perf_counter()
    bad = 0
    graphs = corpus(100, 10, seed=2025)
    for g in graphs:
        tree = build_gomory_hu(g)
        _, best = brute(g)
        bad += sum(min_cut_weight(tree, u, v) != best[u, v]
                   for u, v in itertools.combinations(range(g.n), 2))
        bad += sum(tree.edge_cut(e).weight != e.weight for e in tree.edges)
        bad += len(tree.edges) != g.n - 1
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < 60
    report("AC2 Gomory-Hu validity", ok, f"{len(graphs)} graphs, {bad} violations, {elapsed:.1f}s")
    assert ok


def test_ac03_minimum_basis_weight(full_corpus, report):
    bad = 0
    for g in full_corpus:
        tree_basis = basis_from_tree(g, build_gomory_hu(g))
        greedy = min_basis_greedy(all_cuts(g))
        bad += tree_basis.rank != g.n - 1 or tree_basis.total_weight != greedy.total_weight
    report("AC3 minimum basis weight", bad == 0, f"{len(full_corpus)} graphs, {bad} mismatches")
    assert bad == 0


def test_ac04_k2m_exponential_family(report):
    g = k2m(8)
    s, t = 0, 1
    # independent count over all 127 bipartitions
    cuts, best = brute(g)
    expected = {side for side, w in cuts if (s in side) != (t in side) and w == 6}
    assert best[s, t] == 6 and len(expected) == 64
    rc = relevant_gus_t(g)
    found = {frozenset(c.vertices) for c in rc if c.separates(s, t) and c.weight == 6}
    ok = found == expected and len(found) == 64
    report("AC4 K_{2,6} has 64 weight-6 s,t-cuts", ok, f"found {len(found)}")
    assert ok


def test_ac05_glued_binary_trees(report):
    g = gluetree(4)
    r1, r2 = gluetree_roots(4)
    half = Fraction(1, 2)
    light = [c for c in relevant_gus_t(g) if c.weight == half]
    oracle = [c for c in relevant_by_minpair(all_cuts(g)) if c.weight == half]
    _, best = brute(g)
    ok = (len(light) == 16 and sides(light) == sides(oracle) and best[r1, r2] == half
          and all(c.separates(r1, r2) for c in light))
    report("AC5 glued trees have 16 weight-1/2 root cuts", ok, f"found {len(light)}")
    assert ok


def test_ac06_bonds(full_corpus, report):
    emitted = bad = 0
    for g in full_corpus:
        for fn in (relevant_gus_t, relevant_gus_p, relevant_yeh):
            for c in fn(g):
                emitted += 1
                bad += not is_bond(g, c)
    report("AC6 every emitted cut is a bond", bad == 0, f"{emitted} cuts, {bad} non-bonds")
    assert bad == 0


def test_ac07_bases_separate_all_pairs(full_corpus, report):
    bad = checked = 0
    for g in full_corpus:
        cat = all_cuts(g)
        bases = [basis_from_tree(g, build_gomory_hu(g)).cuts, min_basis_greedy(cat).cuts]
        if len(cat.cuts) <= 15:
            bases.extend(all_minimum_bases(cat))
        for basis in bases:
            checked += 1
            bad += not all(any(c.separates(s, t) for c in basis)
                           for s, t in itertools.combinations(range(g.n), 2))
    report("AC7 bases contain an s,t-cut for every pair", bad == 0, f"{checked} bases, {bad} failures")
    assert bad == 0


def test_ac08_closed_set_correspondence(report):
    graphs = corpus(120, 8, seed=2026)
    bad = 0
    worst = 0.0
    for g in graphs:
        cuts, best = brute(g)
        for s, t in itertools.permutations(range(g.n), 2):
            d = build_pqdag(g, s, t)
            enum = ClosedSetEnumerator(d)
            bound = DELAY_CONSTANT * (g.n + len(d.arcs))
            got = set()
            last = 0
            for side in enum:
                worst = max(worst, (enum.ops - last) / bound)
                last = enum.ops
                got.add(side)
            worst = max(worst, (enum.ops - last) / bound)
            expect = {side for side, w in cuts if s in side and t not in side and w == best[s, t]}
            expect |= {frozenset(range(g.n)) - side for side, w in cuts
                       if t in side and s not in side and w == best[s, t]}
            got_sets = {frozenset(v for v in range(g.n) if m >> v & 1) for m in got}
            bad += got_sets != expect
    ok = bad == 0 and worst <= 1
    report("AC8 closed sets = minimum s,t-cuts, linear delay", ok,
           f"{len(graphs)} graphs, {bad} mismatches, worst delay {worst:.2f} of {DELAY_CONSTANT}(n+arcs)")
    assert ok


def test_ac09_ordered_enumeration(report):
    graphs = corpus(20, 12, seed=2027, n_min=2) + corpus(3, 12, seed=2028, n_min=12)
    bad = 0
    for g in graphs:
        out = list(ordered_cut_enumeration(g))
        weights = [c.iweight for c in out]
        bad += (len(out) != 2 ** (g.n - 1) - 1 or len({c.side for c in out}) != len(out)
                or weights != sorted(weights))
    report("AC9 ordered enumeration is complete and sorted", bad == 0, f"{len(graphs)} graphs, {bad} failures")
    assert bad == 0


@pytest.mark.slow
def test_ac10_benchmark_shape(report):
    t0 = time.perf_counter()
    graphs = random_corpus("100,30,4,1:2:3", seed=0)
    _, summary = run_bench(graphs, ["gus-t", "gus-p"], iters=5)
    elapsed = time.perf_counter() - t0
    t, p = summary.total_time["gus-t"], summary.total_time["gus-p"]
    wins = summary.fastest["gus-t"]
    ok = t < p and wins >= 80 and elapsed < 600
    report("AC10 GUS-T beats GUS-P", ok,
           f"total {t:.2f}s vs {p:.2f}s, GUS-T fastest on {wins}/100, {elapsed:.0f}s")
    assert ok
