"""Gomory-Hu cut trees via Gusfield's contraction-free construction."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import SameVertex
from .flow import max_flow, residual_reach
from .graph import Cut, CutFamily, Graph


@dataclass(frozen=True)
class TreeEdge:
    child: int
    parent: int
    iweight: int
    subtree: int  # vertex mask on the child's side of the edge
    scale: int

    @property
    def weight(self) -> Fraction:
        return Fraction(self.iweight, self.scale)

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.child, self.parent)


@dataclass(frozen=True)
class PathEdge:
    """A tree edge on a path, oriented so ``x`` lies toward the path's start."""

    x: int
    y: int
    edge: TreeEdge


class GomoryHuTree:
    """Edge-weighted spanning tree on the vertices of a graph, rooted at 0.

    ``parent[v]`` is ``None`` for the root; the tree edge above ``v`` has
    weight ``lam[v]`` (a scaled integer, see ``Graph.scale``).
    """

    def __init__(self, g: Graph, parent: list[Optional[int]], lam: list[int]):
        self.graph = g
        self.parent = tuple(parent)
        self.lam = tuple(lam)
        n = g.n
        children: list[list[int]] = [[] for _ in range(n)]
        root = None
        for v, p in enumerate(parent):
            if p is None:
                root = v
            else:
                children[p].append(v)
        self.root = root
        order = [root]
        for v in order:
            order.extend(children[v])
        depth = [0] * n
        for v in order[1:]:
            depth[v] = depth[parent[v]] + 1
        sub = [1 << v for v in range(n)]
        for v in reversed(order[1:]):
            sub[parent[v]] |= sub[v]
        self.depth = tuple(depth)
        self.edges: tuple[TreeEdge, ...] = tuple(
            TreeEdge(v, parent[v], lam[v], sub[v], g.scale) for v in order[1:]
        )
        self._above = {e.child: e for e in self.edges}

    def __repr__(self):
        inner = ", ".join(f"({e.child},{e.parent},{e.weight})" for e in self.edges)
        return f"GomoryHuTree([{inner}])"

    def edge_cut(self, e: TreeEdge) -> Cut:
        return self.graph.cut(e.subtree)

    def path(self, u: int, v: int) -> list[PathEdge]:
        """Tree edges along the path from ``u`` to ``v``, in path order."""
        if u == v:
            raise SameVertex(f"path endpoints are both {u}")
        up: list[PathEdge] = []
        down: list[PathEdge] = []
        a, b = u, v
        while a != b:
            if self.depth[a] >= self.depth[b]:
                e = self._above[a]
                up.append(PathEdge(a, e.parent, e))
                a = e.parent
            else:
                e = self._above[b]
                down.append(PathEdge(e.parent, b, e))
                b = e.parent
        return up + down[::-1]


def build_gomory_hu(g: Graph) -> GomoryHuTree:
    """Gusfield's algorithm: n-1 max flows on the original graph, no contraction.

    Each flow's cut is the residual-reachable side of the current vertex,
    which makes the result deterministic.
    """
    n = g.n
    parent: list[Optional[int]] = [0] * n
    parent[0] = None
    lam = [0] * n
    for s in range(1, n):
        t = parent[s]
        fr = max_flow(g, s, t)
        side = residual_reach(fr)
        lam[s] = fr.ivalue
        for i in range(n):
            if i != s and side >> i & 1 and parent[i] == t:
                parent[i] = s
        pt = parent[t]
        if pt is not None and side >> pt & 1:
            parent[s] = pt
            parent[t] = s
            lam[s] = lam[t]
            lam[t] = fr.ivalue
    return GomoryHuTree(g, parent, lam)


def min_cut_weight(t: GomoryHuTree, u: int, v: int) -> Fraction:
    return Fraction(min(p.edge.iweight for p in t.path(u, v)), t.graph.scale)


def path_min_edges(t: GomoryHuTree, u: int, v: int) -> list[PathEdge]:
    path = t.path(u, v)
    low = min(p.edge.iweight for p in path)
    return [p for p in path if p.edge.iweight == low]


def basis_from_tree(g: Graph, t: GomoryHuTree) -> CutFamily:
    return CutFamily((t.edge_cut(e) for e in t.edges), basis=True)
