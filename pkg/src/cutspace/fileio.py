"""Plain-text graph files.

::

    # comment
    p <n> <m>
    <u> <v> <w>      (m lines; 0-based ids; w integer, a/b, or decimal)
"""
from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .graph import Graph

_INT = re.compile(r"[+-]?\d+\Z")


def format_weight(w: Fraction) -> str:
    return str(w.numerator) if w.denominator == 1 else f"{w.numerator}/{w.denominator}"


def _parse_int(tok: str, what: str, line: int) -> int:
    if not _INT.match(tok):
        raise ParseError(f"bad {what} {tok!r}", line)
    return int(tok)


def _parse_weight(tok: str, line: int) -> Fraction:
    try:
        w = Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad weight {tok!r}", line) from None
    if w <= 0:
        raise ParseError(f"weight must be positive, got {tok}", line)
    return w


def parse_graph(text: str) -> Graph:
    header = None
    edges = []
    last = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if not body:
            continue
        last = lineno
        if header is None:
            if body[0] != "p" or len(body) != 3:
                raise ParseError("expected header 'p <n> <m>'", lineno)
            n = _parse_int(body[1], "vertex count", lineno)
            m = _parse_int(body[2], "edge count", lineno)
            if n < 1 or m < 0:
                raise ParseError("vertex count must be >= 1 and edge count >= 0", lineno)
            header = (n, m)
            continue
        if len(body) != 3:
            raise ParseError("expected edge line '<u> <v> <w>'", lineno)
        if len(edges) == header[1]:
            raise ParseError(f"more than the declared {header[1]} edges", lineno)
        u = _parse_int(body[0], "vertex id", lineno)
        v = _parse_int(body[1], "vertex id", lineno)
        for x in (u, v):
            if not 0 <= x < header[0]:
                raise ParseError(f"vertex id {x} outside 0..{header[0] - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v, _parse_weight(body[2], lineno)))
    if header is None:
        raise ParseError("missing header 'p <n> <m>'", 1)
    if len(edges) != header[1]:
        raise ParseError(f"declared {header[1]} edges, found {len(edges)}", last or 1)
    return Graph(header[0], edges)


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"{e.u} {e.v} {format_weight(e.w)}" for e in g.edges)
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, path, comment: str | None = None) -> None:
    Path(path).write_text(format_graph(g, comment))
