import os
import subprocess
import sys

import pytest

from cutspace.errors import TooLarge
from cutspace.graph import Graph, is_bond
from cutspace.oracle import all_cuts, all_minimum_bases, min_basis_greedy, relevant_by_greedy, relevant_by_minpair

from helpers import K2, K4, K23, P3, TRI, brute, brute_relevant, corpus, sides_of


@pytest.mark.parametrize("make,count", [(P3, 3), (K4, 7), (K2, 1)])
def test_catalog_size(make, count):
    cat = all_cuts(make())
    assert len(cat.cuts) == count
    assert len({c.side for c in cat.cuts}) == count


def test_catalog_is_sorted_and_matches_brute_force():
    for g in corpus(40, 8, seed=51):
        cat = all_cuts(g)
        keys = [c.sort_key() for c in cat.cuts]
        assert keys == sorted(keys)
        _, best = brute(g)
        for (u, v), w in best.items():
            assert cat.min_weight(u, v) == w


def test_too_large():
    g = Graph(18, [(i, i + 1, 1) for i in range(17)])
    with pytest.raises(TooLarge):
        all_cuts(g)
    with pytest.raises(TooLarge):
        all_cuts(P3(), max_n=2)


def test_env_override():
    code = ("from cutspace.oracle import all_cuts; from cutspace.graph import Graph\n"
            "try:\n    all_cuts(Graph(5, [(i, i + 1, 1) for i in range(4)]))\n"
            "except Exception as e:\n    print(type(e).__name__)")
    env = dict(os.environ, CUTSPACE_ORACLE_MAX_N="4")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "TooLarge"


def test_relevant_examples():
    p3 = all_cuts(P3())
    assert sides_of(relevant_by_minpair(p3)) == {frozenset({0}), frozenset({0, 1})}
    assert sides_of(relevant_by_greedy(p3)) == {frozenset({0}), frozenset({0, 1})}
    assert len(relevant_by_minpair(all_cuts(TRI()))) == 3
    k4 = all_cuts(K4())
    assert len(relevant_by_minpair(k4)) == 4
    assert relevant_by_greedy(k4) == relevant_by_minpair(k4)
    k23 = all_cuts(K23())
    assert relevant_by_greedy(k23) == relevant_by_minpair(k23)


def test_min_basis_examples():
    assert min_basis_greedy(all_cuts(P3())).total_weight == 2
    assert min_basis_greedy(all_cuts(TRI())).total_weight == 4
    b = min_basis_greedy(all_cuts(K4()))
    assert b.total_weight == 9 and b.rank == 3 and b.basis


def test_characterizations_agree_with_brute_force():
    for g in corpus(150, 8, seed=52):
        cat = all_cuts(g)
        by_pair = relevant_by_minpair(cat)
        assert by_pair == relevant_by_greedy(cat)
        assert sides_of(by_pair) == brute_relevant(g)
        assert all(is_bond(g, c) for c in by_pair)


def test_greedy_basis_separates_every_pair():
    for g in corpus(60, 8, seed=53):
        b = min_basis_greedy(all_cuts(g))
        assert b.rank == g.n - 1
        assert all(b.contains_st_cut(s, t) for s in range(g.n) for t in range(s + 1, g.n))


def test_union_of_all_minimum_bases_is_the_relevant_set():
    for g in corpus(40, 6, seed=54):
        cat = all_cuts(g)
        target = min_basis_greedy(cat).total_weight
        union = set()
        count = 0
        for basis in all_minimum_bases(cat):
            count += 1
            assert sum(c.weight for c in basis) == target
            union.update(basis)
        assert count >= 1
        assert union == relevant_by_minpair(cat)


def test_all_minimum_bases_refuses_big_catalogs():
    g = Graph(7, [(i, i + 1, 1) for i in range(6)])
    with pytest.raises(TooLarge):
        next(all_minimum_bases(all_cuts(g)))
