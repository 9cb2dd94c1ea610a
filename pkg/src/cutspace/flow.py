"""Maximum flows on undirected graphs and their residual networks."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import Overlap, SameVertex
from .graph import Cut, Graph, mask_of
from .kernels import FlowNetwork

_counter = threading.local()


def flow_calls() -> int:
    """Number of max-flow computations performed by the current thread."""
    return getattr(_counter, "calls", 0)


def network(g: Graph) -> FlowNetwork:
    net = g.__dict__.get("_flow_network")
    if net is None:
        net = FlowNetwork(g)
        g.__dict__["_flow_network"] = net
    return net


@dataclass(frozen=True, eq=False)
class FlowResult:
    """A maximum flow from ``sources`` to ``sinks``.

    ``residual[a]`` is the residual capacity of arc ``a`` in scaled integer
    units; arcs ``2e`` / ``2e+1`` run u->v / v->u for edge ``e = (u, v)``.
    """

    graph: Graph
    sources: tuple[int, ...]
    sinks: tuple[int, ...]
    ivalue: int
    residual: Sequence[int]
    backend: str

    @property
    def source(self) -> int:
        return self.sources[0]

    @property
    def sink(self) -> int:
        return self.sinks[0]

    @property
    def value(self) -> Fraction:
        return Fraction(self.ivalue, self.graph.scale)

    def net_iflow(self, e: int) -> int:
        """Net flow along edge ``e`` from its ``u`` end to its ``v`` end, scaled."""
        return self.graph.iweights[e] - self.residual[2 * e]

    @property
    def arc_flows(self) -> list[Fraction]:
        """Flow on each directed arc; at most one arc of a pair is nonzero."""
        g = self.graph
        out = []
        for e in range(g.m):
            f = self.net_iflow(e)
            out.append(Fraction(max(f, 0), g.scale))
            out.append(Fraction(max(-f, 0), g.scale))
        return out

    def residual_graph(self) -> "ResidualGraph":
        return ResidualGraph.from_flow(self)


@dataclass(frozen=True)
class ResidualGraph:
    """Arcs with positive residual capacity, as out-neighbour lists."""

    n: int
    succ: tuple[tuple[int, ...], ...]

    @classmethod
    def from_flow(cls, fr: FlowResult) -> "ResidualGraph":
        g = fr.graph
        succ: list[list[int]] = [[] for _ in range(g.n)]
        res = fr.residual
        for e in g.edges:
            if res[2 * e.id] > 0:
                succ[e.u].append(e.v)
            if res[2 * e.id + 1] > 0:
                succ[e.v].append(e.u)
        return cls(g.n, tuple(tuple(s) for s in succ))

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.succ[u]


def max_flow_sets(g: Graph, sources: Iterable[int], sinks: Iterable[int]) -> FlowResult:
    """Maximum flow from a vertex set to a disjoint vertex set.

    Equivalent to tying every source to a super-source and every sink to a
    super-sink with arcs of unbounded capacity.
    """
    sources = tuple(sorted(set(sources)))
    sinks = tuple(sorted(set(sinks)))
    if not sources or not sinks:
        raise ValueError("need at least one source and one sink")
    if set(sources) & set(sinks):
        raise Overlap(f"sources and sinks share vertices {sorted(set(sources) & set(sinks))}")
    net = network(g)
    ivalue, residual, used = net.max_flow(sources, sinks)
    _counter.calls = flow_calls() + 1
    return FlowResult(g, sources, sinks, ivalue, residual, used)


def max_flow(g: Graph, s: int, t: int) -> FlowResult:
    if s == t:
        raise SameVertex(f"source and sink are both {s}")
    return max_flow_sets(g, (s,), (t,))


def residual_reach(fr: FlowResult) -> int:
    """Bitmask of the vertices reachable from the sources in the residual graph."""
    net = network(fr.graph)
    flags = net.reachable(fr.residual, fr.sources, fr.backend)
    return mask_of(v for v, f in enumerate(flags) if f)


def min_cut_side(fr: FlowResult) -> Cut:
    """The minimum cut whose source side is the residual-reachable set."""
    return fr.graph.cut(residual_reach(fr))
