"""Picard-Queyranne DAGs: all minimum s,t-cuts of a graph in compact form.

Nodes are strongly connected components of the residual network of one
maximum s,t-flow, and arcs follow the residual arcs between them. A node set
with no arc leaving it is *closed*; the closed sets that contain the source
node and avoid the sink node are exactly the source sides of the minimum
s,t-cuts. After construction the source node is the only node without
out-arcs and the sink node the only node without in-arcs.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

from .errors import Collapse, Overlap, SameVertex
from .flow import max_flow
from .graph import Cut, Graph, iter_bits


class PQDag:
    def __init__(self, graph: Graph, s: int, t: int, nodes, arcs, source: int, sink: int, ivalue: int):
        self.graph = graph
        self.s = s
        self.t = t
        self.nodes: tuple[int, ...] = tuple(nodes)
        self.arcs: tuple[tuple[int, int], ...] = tuple(sorted(set(arcs)))
        self.source = source
        self.sink = sink
        self.ivalue = ivalue
        k = len(self.nodes)
        succ: list[list[int]] = [[] for _ in range(k)]
        pred: list[list[int]] = [[] for _ in range(k)]
        for a, b in self.arcs:
            succ[a].append(b)
            pred[b].append(a)
        self.succ = tuple(tuple(x) for x in succ)
        self.pred = tuple(tuple(x) for x in pred)
        node_of = [0] * graph.n
        for i, mask in enumerate(self.nodes):
            for v in iter_bits(mask):
                node_of[v] = i
        self.node_of = tuple(node_of)

    @property
    def value(self) -> Fraction:
        return Fraction(self.ivalue, self.graph.scale)

    def __len__(self):
        return len(self.nodes)

    def __eq__(self, other):
        if not isinstance(other, PQDag):
            return NotImplemented
        return (self.graph is other.graph and self.s == other.s and self.t == other.t
                and self._canon() == other._canon())

    def __hash__(self):
        return hash(self._canon())

    def _canon(self):
        arcs = frozenset((self.nodes[a], self.nodes[b]) for a, b in self.arcs)
        return frozenset(self.nodes), arcs, self.nodes[self.source], self.nodes[self.sink]

    def __repr__(self):
        return f"PQDag(s={self.s}, t={self.t}, nodes={len(self.nodes)}, arcs={len(self.arcs)})"

    def closure(self, start: Iterable[int], forward: bool = True) -> set[int]:
        nbr = self.succ if forward else self.pred
        seen = set(start)
        stack = list(seen)
        while stack:
            for b in nbr[stack.pop()]:
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
        return seen

    def is_acyclic(self) -> bool:
        indeg = [len(p) for p in self.pred]
        ready = [i for i, d in enumerate(indeg) if d == 0]
        done = 0
        while ready:
            a = ready.pop()
            done += 1
            for b in self.succ[a]:
                indeg[b] -= 1
                if not indeg[b]:
                    ready.append(b)
        return done == len(self.nodes)

    def topological_order(self) -> list[int]:
        """Nodes ordered so every arc points forward (sink node first)."""
        indeg = [len(p) for p in self.pred]
        ready = sorted((i for i, d in enumerate(indeg) if d == 0), reverse=True)
        order = []
        while ready:
            a = ready.pop()
            order.append(a)
            for b in self.succ[a]:
                indeg[b] -= 1
                if not indeg[b]:
                    ready.append(b)
        return order

    def validate(self) -> None:
        """Raise AssertionError if a structural invariant is broken."""
        union = 0
        for mask in self.nodes:
            assert mask and not union & mask, "nodes overlap or are empty"
            union |= mask
        assert union == self.graph.full, "nodes do not cover the vertex set"
        assert self.is_acyclic(), "arc relation has a cycle"
        assert all(a != b for a, b in self.arcs), "self-loop arc"
        no_out = [i for i, s in enumerate(self.succ) if not s]
        no_in = [i for i, p in enumerate(self.pred) if not p]
        assert no_out == [self.source], f"out-degree-0 nodes {no_out}, source {self.source}"
        assert no_in == [self.sink], f"in-degree-0 nodes {no_in}, sink {self.sink}"
        assert self.nodes[self.source] >> self.s & 1 and self.nodes[self.sink] >> self.t & 1

    def reversed(self) -> "PQDag":
        """The DAG for the swapped pair (t, s); its closed sets are the complements."""
        return PQDag(self.graph, self.t, self.s, self.nodes, [(b, a) for a, b in self.arcs],
                     self.sink, self.source, self.ivalue)

    def dump(self) -> str:
        """Text adjacency list: one line per node, then one line per arc."""
        lines = [f"pqdag s={self.s} t={self.t} value={self.value}"]
        for i, mask in enumerate(self.nodes):
            role = " source" if i == self.source else " sink" if i == self.sink else ""
            lines.append(f"node {i}{role}: " + " ".join(map(str, iter_bits(mask))))
        for a, b in self.arcs:
            lines.append(f"arc {a} {b}")
        return "\n".join(lines) + "\n"


def _scc(n: int, succ) -> list[int]:
    """Iterative Tarjan; returns the component id of every vertex."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            nbrs = succ[v]
            while i < len(nbrs):
                w = nbrs[i]
                i += 1
                if index[w] < 0:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
    return comp


def build_pqdag(g: Graph, s: int, t: int) -> PQDag:
    if s == t:
        raise SameVertex(f"source and sink are both {s}")
    fr = max_flow(g, s, t)
    succ = fr.residual_graph().succ
    comp = _scc(g.n, succ)
    nodes = [0] * (max(comp) + 1)
    for v, c in enumerate(comp):
        nodes[c] |= 1 << v
    arcs = {(comp[u], comp[v]) for u in range(g.n) for v in succ[u] if comp[u] != comp[v]}
    raw = PQDag(g, s, t, nodes, arcs, comp[s], comp[t], fr.ivalue)
    return _merge(raw, raw.closure([raw.source]), raw.closure([raw.sink], forward=False))


def _merge(d: PQDag, up: set[int], down: set[int]) -> PQDag:
    if up & down:
        raise Collapse("source and sink nodes would merge")
    remap = {}
    new_nodes = [0]
    for i in sorted(up):
        remap[i] = 0
        new_nodes[0] |= d.nodes[i]
    for i in range(len(d.nodes)):
        if i not in up and i not in down:
            remap[i] = len(new_nodes)
            new_nodes.append(d.nodes[i])
    sink = len(new_nodes)
    new_nodes.append(0)
    for i in sorted(down):
        remap[i] = sink
        new_nodes[sink] |= d.nodes[i]
    arcs = {(remap[a], remap[b]) for a, b in d.arcs if remap[a] != remap[b]}
    return PQDag(d.graph, d.s, d.t, new_nodes, arcs, 0, sink, d.ivalue)


def contract(d: PQDag, X: Iterable[int] = (), Y: Iterable[int] = ()) -> PQDag:
    """Merge X and its successors into the source, Y and its predecessors into the sink."""
    X, Y = set(X), set(Y)
    if X & Y:
        raise Overlap(f"X and Y share vertices {sorted(X & Y)}")
    up = d.closure({d.source} | {d.node_of[v] for v in X})
    down = d.closure({d.sink} | {d.node_of[v] for v in Y}, forward=False)
    if up == {d.source} and down == {d.sink}:
        return d
    return _merge(d, up, down)


_FREE, _IN, _OUT = 0, 1, 2


class ClosedSetEnumerator:
    """Iterate the source sides (vertex masks) of all closed sets of a PQ-DAG.

    Depth-first binary branching on the next free node: put it on the source
    side together with its successors, or on the sink side together with its
    predecessors. Every branch is feasible, so each leaf is an output, and
    closures are applied incrementally with an undo trail; the work between
    two outputs is therefore linear in nodes plus arcs. ``ops`` counts the
    elementary steps (node assignments and undos, arc scans, pointer moves,
    frame pushes and pops) for instrumentation.
    """

    def __init__(self, d: PQDag):
        self.dag = d
        self.ops = 0
        topo = d.topological_order()
        # successors before predecessors: nearest-to-source node first
        self.order = [i for i in reversed(topo) if i not in (d.source, d.sink)]

    def __iter__(self) -> Iterator[int]:
        d = self.dag
        status = [_FREE] * len(d.nodes)
        status[d.source] = _IN
        status[d.sink] = _OUT
        nodes = d.nodes
        order = self.order
        trail: list[int] = []
        side = nodes[d.source]

        def assign(x: int, mark: int, nbr) -> int:
            nonlocal side
            status[x] = mark
            trail.append(x)
            if mark == _IN:
                side |= nodes[x]
            stack = [x]
            steps = 1
            while stack:
                for y in nbr[stack.pop()]:
                    steps += 1
                    if status[y] == _FREE:
                        status[y] = mark
                        trail.append(y)
                        if mark == _IN:
                            side |= nodes[y]
                        stack.append(y)
                        steps += 1
            return steps

        def undo(mark: int) -> int:
            nonlocal side
            steps = 0
            while len(trail) > mark:
                y = trail.pop()
                if status[y] == _IN:
                    side ^= nodes[y]
                status[y] = _FREE
                steps += 1
            return steps

        # frame: [pointer into order, phase, trail mark]
        frames = [[0, 0, 0]]
        self.ops += 1
        while frames:
            f = frames[-1]
            if f[1] == 0:
                p = f[0]
                while p < len(order) and status[order[p]] != _FREE:
                    p += 1
                    self.ops += 1
                f[0] = p
                if p == len(order):
                    frames.pop()
                    self.ops += 1
                    yield side
                    continue
                f[1] = 1
                f[2] = len(trail)
                self.ops += assign(order[p], _IN, d.succ)
                frames.append([p + 1, 0, 0])
                self.ops += 1
            elif f[1] == 1:
                self.ops += undo(f[2])
                f[1] = 2
                self.ops += assign(order[f[0]], _OUT, d.pred)
                frames.append([f[0] + 1, 0, 0])
                self.ops += 1
            else:
                self.ops += undo(f[2])
                frames.pop()
                self.ops += 1


def enumerate_closed_sets(d: PQDag) -> Iterator[Cut]:
    """Every minimum s,t-cut represented by ``d``, each exactly once."""
    g = d.graph
    for side in ClosedSetEnumerator(d):
        yield g.cut(side)

