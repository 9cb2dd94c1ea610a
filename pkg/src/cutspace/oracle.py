"""Exhaustive ground truth for small graphs.

Nothing here touches max-flow: pairwise minimum cut weights come straight
from the full list of bipartitions, so the oracle can cross-check the flow
based methods independently.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import TooLarge
from .graph import Cut, CutFamily, Graph, iter_bits

DEFAULT_MAX_N = 16


def oracle_max_n() -> int:
    raw = os.environ.get("CUTSPACE_ORACLE_MAX_N")
    return int(raw) if raw else DEFAULT_MAX_N


@dataclass(frozen=True)
class CutCatalog:
    """All ``2**(n-1) - 1`` cuts sorted by (weight, side), plus pairwise minima.

    ``imin[u][v]`` is the smallest scaled weight of a cut separating u and v.
    """

    graph: Graph
    cuts: tuple[Cut, ...]
    imin: tuple[tuple[int, ...], ...]

    def min_weight(self, u: int, v: int) -> Fraction:
        return Fraction(self.imin[u][v], self.graph.scale)

    def st_min_cuts(self, s: int, t: int) -> set[Cut]:
        best = self.imin[s][t]
        return {c for c in self.cuts if c.iweight == best and c.separates(s, t)}


def all_cuts(g: Graph, max_n: int | None = None) -> CutCatalog:
    limit = oracle_max_n() if max_n is None else max_n
    if g.n > limit:
        raise TooLarge(f"oracle limited to n <= {limit}, graph has n = {g.n}")
    n = g.n
    cuts = [g.cut(1 | (k << 1)) for k in range((1 << (n - 1)) - 1)]
    cuts.sort(key=Cut.sort_key)
    imin = [[0] * n for _ in range(n)]
    unseen = [g.full ^ (1 << u) for u in range(n)]
    remaining = n * (n - 1) // 2
    for c in cuts:
        if not remaining:
            break
        comp = c.complement
        for u in iter_bits(c.side):
            fresh = unseen[u] & comp
            if not fresh:
                continue
            unseen[u] ^= fresh
            for v in iter_bits(fresh):
                unseen[v] &= ~(1 << u)
                imin[u][v] = imin[v][u] = c.iweight
                remaining -= 1
    return CutCatalog(g, tuple(cuts), tuple(tuple(r) for r in imin))


def relevant_by_minpair(cat: CutCatalog) -> set[Cut]:
    """Cuts that are a minimum u,v-cut for at least one pair."""
    n = cat.graph.n
    at_weight: list[dict[int, int]] = [{} for _ in range(n)]
    for u in range(n):
        for v in range(n):
            if u != v:
                w = cat.imin[u][v]
                at_weight[u][w] = at_weight[u].get(w, 0) | (1 << v)
    out = set()
    for c in cat.cuts:
        comp = c.complement
        if any(at_weight[u].get(c.iweight, 0) & comp for u in iter_bits(c.side)):
            out.add(c)
    return out


def relevant_by_greedy(cat: CutCatalog) -> set[Cut]:
    """Cuts outside the GF(2) span of all strictly lighter cuts."""
    out = set()
    shorter = CutFamily()
    cuts = cat.cuts
    i = 0
    full_rank = cat.graph.n - 1
    while i < len(cuts) and shorter.rank < full_rank:
        j = i
        while j < len(cuts) and cuts[j].iweight == cuts[i].iweight:
            j += 1
        group = cuts[i:j]
        out.update(c for c in group if shorter.independent(c))
        for c in group:
            shorter.append(c)
        i = j
    return out


def min_basis_greedy(cat: CutCatalog) -> CutFamily:
    fam = CutFamily()
    kept = []
    full_rank = cat.graph.n - 1
    for c in cat.cuts:
        if fam.rank == full_rank:
            break
        if fam.independent(c):
            fam.append(c)
            kept.append(c)
    return CutFamily(kept, basis=True)


def all_minimum_bases(cat: CutCatalog, max_catalog: int = 31) -> Iterator[list[Cut]]:
    """Every minimum-weight cut basis, by exhaustive search.

    Doubly exponential; refuses catalogs larger than ``max_catalog`` cuts.
    """
    if len(cat.cuts) > max_catalog:
        raise TooLarge(f"catalog of {len(cat.cuts)} cuts exceeds {max_catalog}")
    target = sum(c.iweight for c in min_basis_greedy(cat))
    need = cat.graph.n - 1
    cuts = cat.cuts

    def extend(start: int, chosen: list[Cut], rows: list[int], weight: int):
        if len(chosen) == need:
            if weight == target:
                yield list(chosen)
            return
        slots = need - len(chosen)
        for i in range(start, len(cuts)):
            c = cuts[i]
            # sorted catalog: the cheapest completion uses this and later cuts
            if weight + slots * c.iweight > target:
                return
            vec = c.cutset
            for r in rows:
                vec = min(vec, vec ^ r)
            if not vec:
                continue
            chosen.append(c)
            yield from extend(i + 1, chosen, sorted(rows + [vec], reverse=True), weight + c.iweight)
            chosen.pop()

    yield from extend(0, [], [], 0)
