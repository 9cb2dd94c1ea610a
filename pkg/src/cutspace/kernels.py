"""Backend selection for the max-flow kernels.

The compiled extension is used when it imported cleanly, unless the
environment variable ``CUTSPACE_KERNEL=python`` forces the pure-Python
fallback. Problems whose capacities could overflow 64-bit arithmetic always
run on the Python backend, which uses arbitrary-precision ints.
"""
from __future__ import annotations

import os
from array import array
from contextlib import contextmanager

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_INT64_HEADROOM = 1 << 62

_BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    _BACKENDS["compiled"] = _compiled


def available() -> list[str]:
    return sorted(_BACKENDS)


def _initial() -> str:
    wanted = os.environ.get("CUTSPACE_KERNEL", "auto").strip().lower()
    if wanted in ("", "auto"):
        return "compiled" if _compiled is not None else "python"
    if wanted not in _BACKENDS:
        raise ImportError(f"CUTSPACE_KERNEL={wanted!r} is not available (have {available()})")
    return wanted


_active = _initial()


def backend() -> str:
    return _active


def set_backend(name: str) -> None:
    global _active
    if name == "auto":
        name = "compiled" if _compiled is not None else "python"
    if name not in _BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}; have {available()}")
    _active = name


@contextmanager
def using(name: str):
    prev = _active
    set_backend(name)
    try:
        yield
    finally:
        set_backend(prev)


class FlowNetwork:
    """Arc layout of a graph in the form both kernels consume.

    Edge ``e`` becomes arcs ``2e`` (u to v) and ``2e+1`` (v to u), each
    with capacity equal to the scaled integer weight of ``e``.
    """

    def __init__(self, g):
        n = g.n
        heads = [0] * (2 * g.m)
        caps = [0] * (2 * g.m)
        out: list[list[int]] = [[] for _ in range(n)]
        for e, iw in zip(g.edges, g.iweights):
            heads[2 * e.id] = e.v
            heads[2 * e.id + 1] = e.u
            caps[2 * e.id] = caps[2 * e.id + 1] = iw
            out[e.u].append(2 * e.id)
            out[e.v].append(2 * e.id + 1)
        indptr = [0]
        adj: list[int] = []
        for arcs in out:
            adj.extend(arcs)
            indptr.append(len(adj))
        self.n = n
        self.lists = (indptr, adj, heads)
        self.caps = caps
        self.fits_int64 = sum(caps) < _INT64_HEADROOM
        self.arrays = (array("q", indptr), array("q", adj), array("q", heads))
        self.caps_array = array("q", caps) if self.fits_int64 else None

    def _pick(self):
        if _active == "compiled" and self.fits_int64:
            return _compiled, self.arrays, self.caps_array
        return _kernels_py, self.lists, self.caps

    def max_flow(self, sources, sinks, caps=None):
        mod, layout, default_caps = self._pick()
        if caps is None:
            caps = default_caps
        value, residual = mod.max_flow(self.n, *layout, caps, sources, sinks)
        return value, residual, mod.BACKEND

    def reachable(self, residual, sources, backend_used):
        if backend_used == "compiled":
            return _compiled.reachable(self.n, *self.arrays, residual, sources)
        return _kernels_py.reachable(self.n, *self.lists, residual, sources)
