"""Command-line interface: ``cutspace <subcommand> ...``.

Exit codes: 0 ok, 2 parse error, 3 disconnected graph, 4 graph too large
for the oracle, 5 methods disagree.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from contextlib import contextmanager
from pathlib import Path

from . import kernels
from .bench import load_corpus, random_corpus, records_csv, run_bench
from .enumeration import METHODS, relevant_cuts
from .errors import DisconnectedGraph, GraphError, MethodDisagreement, TooLarge
from .fileio import format_graph, format_weight, read_graph, write_graph
from .generators import gluetree, k2m, random_chemical
from .gomory_hu import build_gomory_hu
from .graph import Cut

EXIT_OK, EXIT_PARSE, EXIT_DISCONNECTED, EXIT_TOO_LARGE, EXIT_DISAGREE = 0, 2, 3, 4, 5


@contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _side_text(c: Cut) -> str:
    return " ".join(map(str, c.vertices))


def cmd_gomory_hu(args) -> int:
    g = read_graph(args.input)
    tree = build_gomory_hu(g)
    with _output(args.output) as out:
        for e in tree.edges:
            line = f"{e.child} {e.parent} {format_weight(e.weight)}"
            if args.with_cuts:
                line += " side " + _side_text(tree.edge_cut(e))
            out.write(line + "\n")
    return EXIT_OK


def cmd_relevant(args) -> int:
    g = read_graph(args.input)
    rc = relevant_cuts(g, args.method)
    cuts = rc.sorted() if args.sort else list(rc)
    with _output(args.output) as out:
        if args.json:
            doc = {
                "n": g.n,
                "m": g.m,
                "method": rc.method,
                "cuts": [{"weight": format_weight(c.weight), "side": list(c.vertices)} for c in cuts],
                "stats": rc.stats,
            }
            json.dump(doc, out, indent=2)
            out.write("\n")
        else:
            for c in cuts:
                out.write(f"weight {format_weight(c.weight)} side {_side_text(c)}\n")
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.corpus:
        corpus = load_corpus(args.corpus)
    else:
        corpus = random_corpus(args.random, args.seed)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    unknown = [m for m in methods if m not in METHODS]
    if unknown:
        print(f"error: unknown method(s) {', '.join(unknown)}", file=sys.stderr)
        return EXIT_PARSE
    try:
        records, summary = run_bench(corpus, methods, args.iters)
    except MethodDisagreement as exc:
        print(f"error: method disagreement: {exc}", file=sys.stderr)
        if exc.graph is not None:
            dump = args.dump or "disagreement.graph"
            write_graph(exc.graph, dump, comment=str(exc))
            print(f"offending graph written to {dump}", file=sys.stderr)
        return EXIT_DISAGREE
    if args.csv:
        Path(args.csv).write_text(records_csv(records))
    with _output(args.output) as out:
        out.write(f"graphs: {summary.graphs}  iterations: {args.iters}  kernel: {kernels.backend()}\n")
        out.write(summary.table())
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.family == "k2m":
        g, note = k2m(args.n), f"K_2,{args.n - 2} unit weights"
    elif args.family == "gluetree":
        g, note = gluetree(args.n), f"glued binary trees, {args.n} leaves"
    else:
        rng = random.Random(args.seed)
        weights = tuple(int(w) for w in args.weights.split(":"))
        if args.count > 1:
            outdir = Path(args.output or ".")
            outdir.mkdir(parents=True, exist_ok=True)
            for i in range(args.count):
                write_graph(random_chemical(rng, args.n, args.degree, weights), outdir / f"g{i:04d}.graph")
            return EXIT_OK
        g, note = random_chemical(rng, args.n, args.degree, weights), f"random seed {args.seed}"
    with _output(args.output) as out:
        out.write(format_graph(g, note))
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    g = read_graph(args.input)
    reference = relevant_cuts(g, "oracle").sides()
    status = EXIT_OK
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    for name in methods:
        got = relevant_cuts(g, name).sides()
        ok = got == reference
        print(f"{'PASS' if ok else 'FAIL'} {name}: {len(got)} cuts (oracle {len(reference)})")
        if not ok:
            status = EXIT_DISAGREE
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cutspace", description="Minimum cut bases and relevant cuts.")
    p.add_argument("--kernel", choices=["auto", "compiled", "python"], default=None,
                   help="max-flow kernel backend (default: compiled if built)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gomory-hu", help="print a Gomory-Hu tree")
    s.add_argument("input")
    s.add_argument("-o", "--output")
    s.add_argument("--with-cuts", action="store_true", help="append the side of each tree-edge cut")
    s.set_defaults(func=cmd_gomory_hu)

    s = sub.add_parser("relevant", help="list the relevant cuts")
    s.add_argument("input")
    s.add_argument("--method", choices=sorted(METHODS), default="gus-t")
    s.add_argument("--sort", action="store_true", help="order by weight, then side")
    s.add_argument("--json", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_relevant)

    s = sub.add_parser("bench", help="compare methods on a corpus")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--corpus", help="directory of graph files")
    src.add_argument("--random", help="count,n,degree-bound,weights (weights ':'-separated)")
    s.add_argument("--methods", default="gus-t,gus-p,yeh")
    s.add_argument("--iters", type=int, default=5)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--csv", help="write per-graph records here")
    s.add_argument("--dump", help="where to write a graph on which methods disagree")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("generate", help="write a fixture or random graph")
    s.add_argument("--family", choices=["k2m", "gluetree", "random"], required=True)
    s.add_argument("--n", type=int, required=True, help="vertices (k2m, random) or leaves (gluetree)")
    s.add_argument("--degree", type=int, default=4)
    s.add_argument("--weights", default="1:2:3")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=1, help="random only: write this many graphs into -o DIR")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("oracle-check", help="compare methods against brute force")
    s.add_argument("input")
    s.add_argument("--methods", default="gus-t,gus-p,yeh")
    s.set_defaults(func=cmd_oracle_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.kernel:
            kernels.set_backend(args.kernel)
        return args.func(args)
    except DisconnectedGraph as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
