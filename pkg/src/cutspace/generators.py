"""Fixture families and random graph generators."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .graph import Graph


def k2m(n: int) -> Graph:
    """Complete bipartite K_{2,n-2} with unit weights; vertices 0 and 1 are the hubs."""
    if n < 3:
        raise ValueError(f"k2m needs n >= 3, got {n}")
    return Graph(n, [(h, m, 1) for h in (0, 1) for m in range(2, n)])


def gluetree(leaves: int) -> Graph:
    """Two complete binary trees with ``leaves`` leaves, glued at the leaves.

    Heap numbering: the first tree uses ids ``0 .. 2*leaves-2`` with its
    leaves at ``leaves-1 ..``; the second tree's internal nodes follow from
    ``2*leaves-1`` (its root). Leaf-incident edges weigh ``1/(2*leaves)``,
    all others 1, so every root-to-root minimum cut weighs 1/2.
    """
    n = leaves
    if n < 2 or n & (n - 1):
        raise ValueError(f"gluetree needs a power of two >= 2 leaves, got {n}")
    light = Fraction(1, 2 * n)
    first_leaf = n - 1
    second = {i: 2 * n - 1 + i for i in range(n - 1)}  # internal heap index -> id
    edges = []
    for i in range(1, 2 * n - 1):
        p = (i - 1) // 2
        w = light if i >= first_leaf else 1
        edges.append((p, i, w))
        # the second tree shares leaves, so a leaf keeps its first-tree id
        edges.append((second[p], i if i >= first_leaf else second[i], w))
    return Graph(3 * n - 2, edges)


def gluetree_roots(leaves: int) -> tuple[int, int]:
    return 0, 2 * leaves - 1


def random_connected(rng: random.Random, n: int, extra: int,
                     weights: Sequence = (1, 2, 3), max_degree: int | None = None) -> Graph:
    """Random spanning tree plus up to ``extra`` additional distinct edges."""
    deg = [0] * n
    order = list(range(n))
    rng.shuffle(order)
    edges: dict[tuple[int, int], object] = {}
    for i in range(1, n):
        v = order[i]
        choices = [order[j] for j in range(i) if max_degree is None or deg[order[j]] < max_degree]
        if not choices:
            choices = order[:i]
        u = rng.choice(choices)
        edges[(min(u, v), max(u, v))] = rng.choice(weights)
        deg[u] += 1
        deg[v] += 1
    attempts = 0
    while extra > 0 and n > 2 and attempts < 50 * extra:
        attempts += 1
        u, v = rng.sample(range(n), 2)
        key = (min(u, v), max(u, v))
        if key in edges:
            continue
        if max_degree is not None and (deg[u] >= max_degree or deg[v] >= max_degree):
            continue
        edges[key] = rng.choice(weights)
        deg[u] += 1
        deg[v] += 1
        extra -= 1
    return Graph(n, [(u, v, w) for (u, v), w in edges.items()])


def random_chemical(rng: random.Random, n: int, max_degree: int = 4,
                    weights: Sequence = (1, 2, 3)) -> Graph:
    """Sparse, degree-bounded graph: a tree plus a few ring closures."""
    rings = max(0, round(n * rng.uniform(0.05, 0.2)))
    return random_connected(rng, n, rings, weights, max_degree)
