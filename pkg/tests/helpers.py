"""Shared fixtures, corpora and an itertools brute force independent of the package internals."""
import itertools
import random
from fractions import Fraction

from hypothesis import strategies as st

from cutspace.generators import random_connected
from cutspace.graph import Graph

P3_EDGES = [(0, 1, 1), (1, 2, 1)]
TRI_EDGES = [(0, 1, 1), (1, 2, 1), (0, 2, 1)]
K4_EDGES = [(u, v, 1) for u, v in itertools.combinations(range(4), 2)]
# K_{2,3}: parts {0,1} and {2,3,4}
K23_EDGES = [(h, m, 1) for h in (0, 1) for m in (2, 3, 4)]
STAR_EDGES = [(0, 1, 1), (0, 2, 1), (0, 3, 1)]  # centre 0


def P3():
    return Graph(3, P3_EDGES)


def TRI():
    return Graph(3, TRI_EDGES)


def K4():
    return Graph(4, K4_EDGES)


def K23():
    return Graph(5, K23_EDGES)


def K2():
    return Graph(2, [(0, 1, 1)])


def STAR():
    return Graph(4, STAR_EDGES)


def fixtures():
    return {"P3": P3(), "TRI": TRI(), "K4": K4(), "K23": K23(), "K2": K2(), "STAR": STAR()}


WEIGHT_SETS = [(1,), (1, 2, 3), (1, 2), (Fraction(1, 2), 1, Fraction(3, 2)), (1, 5, 7)]


def random_graph(rng, n, weights=None):
    if weights is None:
        weights = rng.choice(WEIGHT_SETS)
    extra = rng.randrange(0, n * (n - 1) // 2 - n + 2) if n > 2 else 0
    return random_connected(rng, n, extra, weights)


def corpus(count, n_max, seed, n_min=2):
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(n_min, n_max)) for _ in range(count)]


def brute(g):
    """All cuts as (frozenset side containing 0, weight) and pairwise minima, by itertools."""
    V = range(g.n)
    cuts = []
    for r in range(0, g.n - 1):
        for rest in itertools.combinations(range(1, g.n), r):
            side = frozenset((0,) + rest)
            w = sum((e.w for e in g.edges if (e.u in side) != (e.v in side)), Fraction(0))
            cuts.append((side, w))
    best = {}
    for u, v in itertools.combinations(V, 2):
        best[u, v] = best[v, u] = min(w for side, w in cuts if (u in side) != (v in side))
    return cuts, best


def brute_min_st(g, s, t):
    cuts, best = brute(g)
    return {side for side, w in cuts if (s in side) != (t in side) and w == best[s, t]}


def brute_relevant(g):
    cuts, best = brute(g)
    return {side for side, w in cuts
            if any(w == best[u, v] for u in side for v in range(g.n) if v not in side)}


def sides_of(cuts):
    return {frozenset(c.vertices) for c in cuts}


@st.composite
def graphs(draw, n_min=2, n_max=7):
    n = draw(st.integers(n_min, n_max))
    w = st.sampled_from([1, 2, 3, Fraction(1, 2)])
    edges = [(draw(st.integers(0, v - 1)), v, draw(w)) for v in range(1, n)]
    pairs = list(itertools.combinations(range(n), 2))
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=n * 2, unique=True))
        edges += [(u, v, draw(w)) for u, v in extra]
    return Graph(n, edges)
