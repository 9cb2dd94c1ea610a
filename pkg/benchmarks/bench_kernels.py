"""Compare the compiled max-flow kernel against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--graphs 30] [--n 60] [--repeat 3]

Times three workloads on the same random corpus with each available
backend: raw s,t max flows over every vertex pair from vertex 0, full
GUS-T relevant-cut enumeration, and ordered enumeration of the first
200 cuts.
"""
from __future__ import annotations

import argparse
import itertools
import random
import sys
import time

from cutspace import kernels
from cutspace.enumeration import ordered_cut_enumeration, relevant_gus_t
from cutspace.flow import max_flow
from cutspace.generators import random_chemical


def flows(graphs):
    for g in graphs:
        for t in range(1, g.n):
            max_flow(g, 0, t)


def gus_t(graphs):
    for g in graphs:
        relevant_gus_t(g)


def ordered(graphs):
    for g in graphs:
        for _ in itertools.islice(ordered_cut_enumeration(g), 200):
            pass


WORKLOADS = {"max-flow": flows, "gus-t": gus_t, "ordered-200": ordered}


def timed(fn, graphs, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(graphs)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--graphs", type=int, default=30)
    p.add_argument("--n", type=int, default=60)
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)

    rng = random.Random(args.seed)
    graphs = [random_chemical(rng, args.n, args.degree) for _ in range(args.graphs)]
    backends = kernels.available()
    if "compiled" not in backends:
        print("compiled kernel not built; only the Python fallback is available", file=sys.stderr)

    print(f"{args.graphs} graphs, n={args.n}, best of {args.repeat}")
    print(f"{'workload':<14}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for name, fn in WORKLOADS.items():
        times = {}
        for b in backends:
            with kernels.using(b):
                times[b] = timed(fn, graphs, args.repeat)
        row = f"{name:<14}" + "".join(f"{times[b]:>11.3f}s" for b in backends)
        if len(backends) > 1:
            row += f"{times['python'] / times['compiled']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
