"""Comparative benchmark of the relevant-cut methods on a graph corpus."""
from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence

from .enumeration import METHODS, RelevantCutSet
from .errors import MethodDisagreement
from .fileio import read_graph
from .generators import random_chemical
from .graph import Graph


@dataclass
class BenchRecord:
    graph_id: str
    n: int
    m: int
    method: str
    relevant: int
    wall_time: float  # mean seconds per run
    flow_calls: int
    iterations: int


@dataclass
class BenchSummary:
    methods: list[str]
    total_time: dict[str, float]
    fastest: dict[str, int]
    graphs: int

    def table(self) -> str:
        width = max(10, *(len(m) for m in self.methods))
        head = f"{'Category':<28}" + "".join(f"{m:>{width + 2}}" for m in self.methods)
        rows = [
            f"{'Total Running Time [s]':<28}" + "".join(f"{self.total_time[m]:>{width + 2}.4f}" for m in self.methods),
            f"{'Fastest Method [# Graphs]':<28}" + "".join(f"{self.fastest[m]:>{width + 2}d}" for m in self.methods),
        ]
        return "\n".join([head, "-" * len(head), *rows]) + "\n"


def parse_random_recipe(recipe: str) -> tuple[int, int, int, tuple[int, ...]]:
    """``count,n,degree-bound,weight-set`` with weights separated by ':' (e.g. ``100,30,4,1:2:3``)."""
    parts = recipe.split(",")
    if len(parts) != 4:
        raise ValueError(f"random recipe {recipe!r} must be count,n,degree-bound,weights")
    count, n, deg = (int(p) for p in parts[:3])
    weights = tuple(int(w) for w in parts[3].split(":") if w)
    if count < 1 or n < 2 or deg < 2 or not weights or min(weights) <= 0:
        raise ValueError(f"invalid random recipe {recipe!r}")
    return count, n, deg, weights


def random_corpus(recipe: str, seed: int = 0) -> list[tuple[str, Graph]]:
    count, n, deg, weights = parse_random_recipe(recipe)
    rng = random.Random(seed)
    return [(f"random-{i:04d}", random_chemical(rng, n, deg, weights)) for i in range(count)]


def load_corpus(directory) -> list[tuple[str, Graph]]:
    paths = sorted(p for p in Path(directory).iterdir() if p.is_file() and not p.name.startswith("."))
    return [(p.name, read_graph(p)) for p in paths]


def run_bench(
    corpus: Iterable[tuple[str, Graph]],
    methods: Sequence[str] | Mapping[str, Callable[[Graph], RelevantCutSet]] = ("gus-t", "gus-p"),
    iters: int = 5,
) -> tuple[list[BenchRecord], BenchSummary]:
    """Time every method on every graph; the cut sets must agree exactly.

    Only the enumeration call is timed. Raises ``MethodDisagreement`` with
    the offending graph attached on the first mismatch.
    """
    if not isinstance(methods, Mapping):
        methods = {name: METHODS[name] for name in methods}
    names = list(methods)
    records: list[BenchRecord] = []
    totals = dict.fromkeys(names, 0.0)
    fastest = dict.fromkeys(names, 0)
    graphs = 0
    for gid, g in corpus:
        graphs += 1
        times = {}
        reference = None
        for name in names:
            fn = methods[name]
            elapsed = 0.0
            result = None
            for _ in range(iters):
                t0 = time.perf_counter()
                result = fn(g)
                elapsed += time.perf_counter() - t0
            sides = result.sides()
            if reference is None:
                reference = (name, sides)
            elif sides != reference[1]:
                raise MethodDisagreement(
                    f"{gid}: {name} found {len(sides)} cuts, {reference[0]} found {len(reference[1])}",
                    graph=g,
                )
            times[name] = elapsed / iters
            totals[name] += times[name]
            records.append(BenchRecord(gid, g.n, g.m, name, len(sides), times[name],
                                       result.stats.get("flow_calls", 0), iters))
        fastest[min(names, key=times.__getitem__)] += 1
    return records, BenchSummary(names, totals, fastest, graphs)


def records_csv(records: Sequence[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=[f.name for f in fields(BenchRecord)])
    writer.writeheader()
    for r in records:
        writer.writerow(asdict(r))
    return buf.getvalue()
