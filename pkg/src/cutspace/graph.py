"""Weighted undirected graphs, cuts, and GF(2) cut-space algebra.

Vertex subsets and edge subsets are Python ints used as bitsets: bit ``v``
of a side mask is vertex ``v``, bit ``e`` of a cutset mask is edge ``e``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Optional, Union

from .errors import DisconnectedGraph, EmptySide, FullSide, GraphError, MixedGraph

WeightLike = Union[int, Fraction, float, str]


def as_weight(w: WeightLike) -> Fraction:
    """Convert a user-supplied weight to an exact rational."""
    if isinstance(w, bool):
        raise GraphError(f"invalid weight {w!r}")
    if isinstance(w, float):
        if not math.isfinite(w):
            raise GraphError(f"invalid weight {w!r}")
        # repr() keeps 0.1 as 1/10 rather than its binary expansion
        return Fraction(repr(w))
    try:
        return Fraction(w)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise GraphError(f"invalid weight {w!r}") from exc


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Edge(NamedTuple):
    u: int
    v: int
    w: Fraction
    id: int


class Graph:
    """Immutable weighted, undirected, connected graph on vertices ``0..n-1``.

    Parallel edges are merged by summing their weights; the surviving edge
    keeps the position of its first occurrence.
    """

    def __init__(self, n: int, edges: Iterable[tuple]):
        if not isinstance(n, int) or n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {n!r}")
        merged: dict[tuple[int, int], Fraction] = {}
        for item in edges:
            u, v, w = item[0], item[1], item[2]
            if not (isinstance(u, int) and isinstance(v, int)) or not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u!r}, {v!r}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            w = as_weight(w)
            if w <= 0:
                raise GraphError(f"edge ({u}, {v}) has non-positive weight {w}")
            key = (u, v) if u < v else (v, u)
            merged[key] = merged.get(key, Fraction(0)) + w
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(
            Edge(u, v, w, i) for i, ((u, v), w) in enumerate(merged.items())
        )
        self.m = len(self.edges)
        self.full = (1 << n) - 1
        # common denominator turns every weight into an exact integer
        self.scale = math.lcm(*(e.w.denominator for e in self.edges)) if self.edges else 1
        self.iweights: tuple[int, ...] = tuple(
            e.w.numerator * (self.scale // e.w.denominator) for e in self.edges
        )
        nbr = [0] * n
        inc = [0] * n
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for e in self.edges:
            nbr[e.u] |= 1 << e.v
            nbr[e.v] |= 1 << e.u
            inc[e.u] |= 1 << e.id
            inc[e.v] |= 1 << e.id
            adj[e.u].append((e.v, e.id))
            adj[e.v].append((e.u, e.id))
        self.neighbors: tuple[int, ...] = tuple(nbr)
        self.incidence: tuple[int, ...] = tuple(inc)
        self.adjacency: tuple[tuple[tuple[int, int], ...], ...] = tuple(tuple(a) for a in adj)
        if not self.is_connected_mask(self.full):
            raise DisconnectedGraph()

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    @cached_property
    def vertices(self) -> range:
        return range(self.n)

    def is_connected_mask(self, mask: int) -> bool:
        """True iff the subgraph induced by the vertices in ``mask`` is connected."""
        if mask == 0:
            return False
        start = mask & -mask
        seen = start
        frontier = start
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= self.neighbors[v]
            frontier = grow & mask & ~seen
            seen |= frontier
        return seen == mask

    def cutset_of(self, side: int) -> int:
        d = 0
        for v in iter_bits(side):
            d ^= self.incidence[v]
        return d

    def iweight_of(self, cutset: int) -> int:
        iw = self.iweights
        return sum(iw[e] for e in iter_bits(cutset))

    def cut(self, side: int) -> "Cut":
        """Build a :class:`Cut` from a vertex bitmask."""
        side &= self.full
        if side == 0:
            raise EmptySide("cut side is empty")
        if side == self.full:
            raise FullSide("cut side is the whole vertex set")
        if not side & 1:
            side = self.full ^ side
        cutset = self.cutset_of(side)
        iw = self.iweight_of(cutset)
        return Cut(self, side, cutset, iw)


@dataclass(frozen=True, eq=False)
class Cut:
    """A bipartition stored by its canonical side (the one holding vertex 0)."""

    graph: Graph
    side: int
    cutset: int
    iweight: int

    @property
    def weight(self) -> Fraction:
        return Fraction(self.iweight, self.graph.scale)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.side))

    @property
    def complement(self) -> int:
        return self.graph.full ^ self.side

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.cutset))

    def separates(self, u: int, v: int) -> bool:
        return bool((self.side >> u ^ self.side >> v) & 1)

    def sort_key(self):
        return (self.iweight, self.vertices)

    def __eq__(self, other):
        if not isinstance(other, Cut):
            return NotImplemented
        return self.side == other.side and self.graph is other.graph

    def __hash__(self):
        return hash(self.side)

    def __repr__(self):
        return f"Cut(weight={self.weight}, side={list(self.vertices)})"


def cut_from_side(g: Graph, side: Iterable[int]) -> Cut:
    """Cut with one side equal to ``side`` (canonicalized to contain vertex 0)."""
    side = set(side)
    if any(not (0 <= v < g.n) for v in side):
        raise GraphError(f"side {sorted(side)} contains vertices outside 0..{g.n - 1}")
    return g.cut(mask_of(side))


def vertex_cut(g: Graph, x: int) -> Cut:
    return g.cut(1 << x)


def xor(a: Optional[Cut], b: Optional[Cut]) -> Optional[Cut]:
    """Sum in the cut space. ``None`` stands for the zero vector."""
    if a is None:
        return b
    if b is None:
        return a
    if a.graph is not b.graph:
        raise MixedGraph("cuts belong to different graphs")
    side = a.side ^ b.side
    if side == 0:
        return None
    # both canonical sides contain vertex 0, so the difference never does
    return a.graph.cut(side)


def is_bond(g: Graph, c: Cut) -> bool:
    """True iff both sides of ``c`` induce connected subgraphs."""
    return g.is_connected_mask(c.side) and g.is_connected_mask(c.complement)


class CutFamily:
    """Ordered list of cuts plus incremental GF(2) elimination over cutsets.

    Pivot rows are kept reduced so that a membership test costs one pass
    over at most ``n - 1`` stored rows.
    """

    def __init__(self, cuts: Iterable[Cut] = (), basis: bool = False):
        self.cuts: list[Cut] = []
        self.graph: Optional[Graph] = None
        self._rows: dict[int, int] = {}
        for c in cuts:
            self.append(c)
        self.basis = basis

    def __len__(self):
        return len(self.cuts)

    def __iter__(self):
        return iter(self.cuts)

    def __contains__(self, c):
        return c in self.cuts

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def total_weight(self) -> Fraction:
        return sum((c.weight for c in self.cuts), Fraction(0))

    def _check(self, c: Cut):
        if self.graph is None:
            self.graph = c.graph
        elif c.graph is not self.graph:
            raise MixedGraph("cuts belong to different graphs")

    def reduce(self, vec: int) -> int:
        for pivot, row in self._rows.items():
            if vec >> pivot & 1:
                vec ^= row
        return vec

    def independent(self, c: Cut) -> bool:
        if self.graph is not None and c.graph is not self.graph:
            raise MixedGraph("cuts belong to different graphs")
        return self.reduce(c.cutset) != 0

    def append(self, c: Cut) -> bool:
        """Add ``c``; return whether it increased the rank."""
        self._check(c)
        self.cuts.append(c)
        vec = self.reduce(c.cutset)
        if not vec:
            return False
        pivot = vec.bit_length() - 1
        for p, row in self._rows.items():
            if row >> pivot & 1:
                self._rows[p] = row ^ vec
        self._rows[pivot] = vec
        return True

    def contains_st_cut(self, s: int, t: int) -> bool:
        return any(c.separates(s, t) for c in self.cuts)


def rank(fam: Union[CutFamily, Iterable[Cut]]) -> int:
    if not isinstance(fam, CutFamily):
        fam = CutFamily(fam)
    return fam.rank


def is_independent_with(fam: CutFamily, d: Cut) -> bool:
    return fam.independent(d)
