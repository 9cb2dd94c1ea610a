"""Pure-Python max-flow kernels.

Reference implementation of the compiled kernels in ``_kernels.pyx``; the
two modules expose the same functions with the same signatures.

Graph layout (shared with the compiled twin): arcs ``2e`` and ``2e+1`` are
the two directions of undirected edge ``e``, so ``a ^ 1`` is the reverse of
arc ``a``. ``heads[a]`` is the arc's target; the arcs leaving vertex ``u``
are ``adj[indptr[u]:indptr[u+1]]`` in input order.
"""

BACKEND = "python"


def max_flow(n, indptr, adj, heads, caps, sources, sinks):
    """Dinic blocking-flow max flow from the vertex set ``sources`` to ``sinks``.

    Every source (sink) behaves as if tied to a super-source (super-sink) by
    an arc of unbounded capacity. Returns ``(value, residual)``.
    """
    indptr = list(indptr)
    adj = list(adj)
    heads = list(heads)
    res = list(caps)
    is_sink = [False] * n
    for t in sinks:
        is_sink[t] = True
    total = 0
    while True:
        level = [-1] * n
        queue = list(sources)
        for s in queue:
            level[s] = 0
        limit = n + 1
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            lu = level[u]
            if is_sink[u]:
                limit = lu
                continue
            if lu >= limit:
                continue
            for k in range(indptr[u], indptr[u + 1]):
                a = adj[k]
                if res[a] > 0:
                    v = heads[a]
                    if level[v] < 0:
                        level[v] = lu + 1
                        queue.append(v)
        if limit > n:
            break
        it = indptr[:n]
        for s in sources:
            path = []
            u = s
            while True:
                if is_sink[u]:
                    b = min(res[a] for a in path)
                    total += b
                    cut_at = -1
                    for i, a in enumerate(path):
                        res[a] -= b
                        res[a ^ 1] += b
                        if cut_at < 0 and res[a] == 0:
                            cut_at = i
                    del path[cut_at:]
                    u = heads[path[-1]] if path else s
                    continue
                lu = level[u] + 1
                end = indptr[u + 1]
                i = it[u]
                a = -1
                while i < end:
                    cand = adj[i]
                    if res[cand] > 0 and level[heads[cand]] == lu:
                        a = cand
                        break
                    i += 1
                it[u] = i
                if a >= 0:
                    path.append(a)
                    u = heads[a]
                elif not path:
                    break
                else:
                    level[u] = -1
                    a = path.pop()
                    u = heads[a ^ 1]
                    it[u] += 1
    return total, res


def reachable(n, indptr, adj, heads, residual, sources):
    """Flags of the vertices reachable from ``sources`` along positive residual arcs."""
    seen = bytearray(n)
    stack = list(sources)
    for s in stack:
        seen[s] = 1
    while stack:
        u = stack.pop()
        for k in range(indptr[u], indptr[u + 1]):
            a = adj[k]
            if residual[a] > 0:
                v = heads[a]
                if not seen[v]:
                    seen[v] = 1
                    stack.append(v)
    return seen
