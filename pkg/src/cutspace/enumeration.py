"""Relevant-cut enumeration strategies.

``gus-t``
    Picard-Queyranne DAGs of the Gomory-Hu tree edges only.
``gus-p``
    For every vertex pair, the path-minimum tree-edge DAGs contracted
    toward that pair.
``yeh``
    All cuts in non-decreasing weight order, filtered by a pairwise table
    of the lightest separating weight seen so far.

All three return the same set: the cuts that are a minimum u,v-cut for some
pair u, v.
"""
from __future__ import annotations

import heapq
import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

from .errors import MixedGraph
from .flow import flow_calls, max_flow_sets, residual_reach
from .gomory_hu import GomoryHuTree, build_gomory_hu, path_min_edges
from .graph import Cut, Graph, iter_bits
from .oracle import all_cuts, relevant_by_minpair
from .pqdag import ClosedSetEnumerator, PQDag, build_pqdag, contract


@dataclass
class RelevantCutSet:
    """Deduplicated cuts keyed by canonical side, in first-seen order."""

    graph: Graph
    method: str
    cuts: dict[int, Cut] = field(default_factory=dict)
    stats: dict = field(default_factory=dict)
    weight_matrix: Optional["WeightMatrix"] = None

    def __len__(self):
        return len(self.cuts)

    def __iter__(self):
        return iter(self.cuts.values())

    def __contains__(self, c):
        return isinstance(c, Cut) and c.side in self.cuts

    def add(self, c: Cut) -> bool:
        if c.graph is not self.graph:
            raise MixedGraph("cut belongs to a different graph")
        if c.side in self.cuts:
            return False
        self.cuts[c.side] = c
        return True

    def add_side(self, side: int) -> bool:
        g = self.graph
        if not side & 1:
            side ^= g.full
        if side in self.cuts:
            return False
        self.cuts[side] = g.cut(side)
        return True

    def sides(self) -> frozenset[int]:
        return frozenset(self.cuts)

    def as_set(self) -> set[Cut]:
        return set(self.cuts.values())

    def sorted(self) -> list[Cut]:
        return sorted(self.cuts.values(), key=Cut.sort_key)


class WeightMatrix:
    """Pairwise lightest separating weight seen so far; entries start at infinity.

    Entries are written once. ``unseen[u]`` is the bitmask of vertices v with
    an infinite entry for (u, v).
    """

    def __init__(self, g: Graph):
        self.graph = g
        n = g.n
        self._w: list[list[Optional[int]]] = [[None] * n for _ in range(n)]
        self.unseen = [g.full ^ (1 << u) for u in range(n)]
        self.missing = n * (n - 1) // 2
        self.max_finite: Optional[int] = None

    def __getitem__(self, uv):
        u, v = uv
        w = self._w[u][v]
        return math.inf if w is None else Fraction(w, self.graph.scale)

    def iweight(self, u: int, v: int) -> Optional[int]:
        return self._w[u][v]

    @property
    def complete(self) -> bool:
        return self.missing == 0

    def fill(self, u: int, vs: int, iweight: int) -> None:
        """Set W[u][v] = W[v][u] = iweight for every v in mask ``vs`` (all infinite)."""
        self.unseen[u] &= ~vs
        for v in iter_bits(vs):
            self._w[u][v] = self._w[v][u] = iweight
            self.unseen[v] &= ~(1 << u)
            self.missing -= 1
        if self.max_finite is None or iweight > self.max_finite:
            self.max_finite = iweight


def _finish(rc: RelevantCutSet, t0: float, calls0: int, **extra) -> RelevantCutSet:
    rc.stats.update(extra)
    rc.stats["flow_calls"] = flow_calls() - calls0
    rc.stats["relevant"] = len(rc)
    rc.stats["elapsed"] = time.perf_counter() - t0
    return rc


def relevant_gus_t(g: Graph, tree: Optional[GomoryHuTree] = None) -> RelevantCutSet:
    t0, calls0 = time.perf_counter(), flow_calls()
    if tree is None:
        tree = build_gomory_hu(g)
    rc = RelevantCutSet(g, "gus-t")
    emitted = 0
    for e in sorted(tree.edges, key=lambda e: e.iweight):
        for side in ClosedSetEnumerator(build_pqdag(g, e.child, e.parent)):
            emitted += 1
            rc.add_side(side)
    return _finish(rc, t0, calls0, dags_built=len(tree.edges), emitted=emitted)


def relevant_gus_p(g: Graph, tree: Optional[GomoryHuTree] = None) -> RelevantCutSet:
    t0, calls0 = time.perf_counter(), flow_calls()
    if tree is None:
        tree = build_gomory_hu(g)
    rc = RelevantCutSet(g, "gus-p")
    dags: dict[tuple[int, int], PQDag] = {}
    built = 0
    emitted = 0
    for u, v in itertools.combinations(range(g.n), 2):
        for pe in path_min_edges(tree, u, v):
            d = dags.get((pe.x, pe.y))
            if d is None:
                d = dags.get((pe.y, pe.x))
                if d is None:
                    d = build_pqdag(g, pe.edge.child, pe.edge.parent)
                    built += 1
                    dags[(d.s, d.t)] = d
                if (d.s, d.t) != (pe.x, pe.y):
                    d = d.reversed()
                    dags[(pe.x, pe.y)] = d
            for side in ClosedSetEnumerator(contract(d, (u,), (v,))):
                emitted += 1
                rc.add_side(side)
    return _finish(rc, t0, calls0, dags_built=built, emitted=emitted)


def ordered_cut_enumeration(g: Graph) -> Iterator[Cut]:
    """Every cut of ``g`` exactly once, lightest first.

    Best-first Lawler partitioning: each subproblem fixes a set S of
    vertices on vertex 0's side and a set T on the other side, and its
    champion is the residual-reachable minimum cut between S and T. Popping
    a champion splits the rest of its subproblem into children that
    disagree with the champion on one more free vertex. Equal weights are
    broken by the sorted vertex list of the canonical side.
    """
    n = g.n
    if n < 2:
        return
    tie = itertools.count()
    heap: list = []

    def push(S: int, T: int):
        fr = max_flow_sets(g, iter_bits(S), iter_bits(T))
        side = residual_reach(fr)
        heapq.heappush(heap, (fr.ivalue, tuple(iter_bits(side)), next(tie), S, T, side))

    # the first vertex not on 0's side partitions all cuts
    for i in range(1, n):
        push((1 << i) - 1, 1 << i)
    while heap:
        _, _, _, S, T, side = heapq.heappop(heap)
        yield g.cut(side)
        free = g.full & ~(S | T)
        for f in iter_bits(free):
            bit = 1 << f
            if side & bit:
                push(S, T | bit)
                S |= bit
            else:
                push(S | bit, T)
                T |= bit


def relevant_yeh(g: Graph) -> RelevantCutSet:
    """Ordered cut generation with a pairwise weight table as relevance filter.

    A cut is kept when it separates some pair whose table entry is still
    infinite or was written at this same weight (a tie for that pair's
    minimum). Generation stops once every entry is finite and the weight
    rises above the largest entry.
    """
    t0, calls0 = time.perf_counter(), flow_calls()
    rc = RelevantCutSet(g, "yeh")
    W = WeightMatrix(g)
    level = None
    at_level = [0] * g.n
    examined = 0
    for cut in ordered_cut_enumeration(g):
        examined += 1
        w = cut.iweight
        if W.complete and w > W.max_finite:
            break
        if w != level:
            level = w
            at_level = [0] * g.n
        comp = cut.complement
        keep = False
        for u in iter_bits(cut.side):
            if at_level[u] & comp:
                keep = True
            fresh = W.unseen[u] & comp
            if fresh:
                keep = True
                W.fill(u, fresh, w)
                at_level[u] |= fresh
                for v in iter_bits(fresh):
                    at_level[v] |= 1 << u
        if keep:
            rc.add(cut)
    rc.weight_matrix = W
    return _finish(rc, t0, calls0, emitted=examined)


def relevant_oracle(g: Graph) -> RelevantCutSet:
    t0, calls0 = time.perf_counter(), flow_calls()
    rc = RelevantCutSet(g, "oracle")
    for c in sorted(relevant_by_minpair(all_cuts(g)), key=Cut.sort_key):
        rc.add(c)
    return _finish(rc, t0, calls0)


def dedup_union(*streams: Iterable[Cut], graph: Optional[Graph] = None, method: str = "union") -> RelevantCutSet:
    """Union of cut streams, deduplicated on canonical side."""
    rc = None if graph is None else RelevantCutSet(graph, method)
    emitted = 0
    for stream in streams:
        for c in stream:
            if rc is None:
                rc = RelevantCutSet(c.graph, method)
            rc.add(c)
            emitted += 1
    if rc is None:
        return RelevantCutSet(None, method, stats={"emitted": 0})
    rc.stats["emitted"] = emitted
    return rc


METHODS: dict[str, Callable[[Graph], RelevantCutSet]] = {
    "gus-t": relevant_gus_t,
    "gus-p": relevant_gus_p,
    "yeh": relevant_yeh,
    "oracle": relevant_oracle,
}


def relevant_cuts(g: Graph, method: str = "gus-t") -> RelevantCutSet:
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(METHODS)}") from None
    return fn(g)
