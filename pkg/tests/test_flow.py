from fractions import Fraction

import pytest
from hypothesis import given, settings

from cutspace.errors import SameVertex
from cutspace.flow import max_flow, min_cut_side, residual_reach
from cutspace.graph import Graph

from helpers import K4, K23, P3, STAR, brute, corpus, graphs


def test_path_end_to_end(backend):
    assert max_flow(P3(), 0, 2).value == 1


def test_k4_any_pair(backend):
    g = K4()
    for s in range(4):
        for t in range(4):
            if s != t:
                assert max_flow(g, s, t).value == 3


def test_same_vertex():
    with pytest.raises(SameVertex):
        max_flow(P3(), 1, 1)


def test_min_cut_side_path(backend):
    c = min_cut_side(max_flow(P3(), 0, 2))
    assert c.vertices == (0,) and c.weight == 1


def test_min_cut_side_k23(backend):
    fr = max_flow(K23(), 0, 1)
    c = min_cut_side(fr)
    assert fr.value == 3 and c.weight == 3 and c.separates(0, 1)


def test_min_cut_side_star_leaf(backend):
    c = min_cut_side(max_flow(STAR(), 2, 0))
    assert c.weight == 1
    assert set(range(4)) - set(c.vertices) == {2}


def test_flow_is_feasible(backend):
    for g in corpus(40, 9, seed=2):
        fr = max_flow(g, 0, g.n - 1)
        flows = fr.arc_flows
        net = [Fraction(0)] * g.n
        for e in g.edges:
            fwd, back = flows[2 * e.id], flows[2 * e.id + 1]
            assert 0 <= fwd <= e.w and 0 <= back <= e.w and (fwd == 0 or back == 0)
            net[e.u] += fwd - back
            net[e.v] += back - fwd
        assert net[0] == fr.value and net[g.n - 1] == -fr.value
        assert all(x == 0 for x in net[1:-1])


@settings(max_examples=80, deadline=None)
@given(graphs(n_max=8))
def test_duality_and_symmetry(g):
    _, best = brute(g)
    for s in range(g.n):
        for t in range(g.n):
            if s == t:
                continue
            fr = max_flow(g, s, t)
            assert fr.value == best[s, t]
            assert max_flow(g, t, s).value == fr.value
            assert min_cut_side(fr).weight == fr.value


def test_residual_graph_arcs(backend):
    fr = max_flow(P3(), 0, 2)
    rg = fr.residual_graph()
    # one unit saturates both edges toward 2; only the backward arcs remain
    assert rg.succ == ((), (0,), (1,))
    assert residual_reach(fr) == 0b001


def test_fractional_weights(backend):
    g = Graph(3, [(0, 1, Fraction(1, 3)), (1, 2, Fraction(1, 2)), (0, 2, Fraction(1, 6))])
    assert max_flow(g, 0, 2).value == Fraction(1, 2)
