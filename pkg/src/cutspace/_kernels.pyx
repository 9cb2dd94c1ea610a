# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled max-flow kernels; mirrors ``_kernels_py`` function for function.

Capacities are 64-bit integers. The dispatcher in ``kernels.py`` only sends
problems here whose total capacity fits comfortably in a signed 64-bit word.
"""
from cpython cimport array
import array

BACKEND = "compiled"

cdef array.array _LL = array.array("q")


cdef inline array.array _zeros(Py_ssize_t k):
    cdef array.array out = array.clone(_LL, k, zero=True)
    return out


def max_flow(Py_ssize_t n, const long long[:] ip, const long long[:] ad,
             const long long[:] hd, caps, sources, sinks):
    cdef array.array a_res = array.array("q", caps)
    cdef array.array a_src = array.array("q", sources)
    cdef long long[:] res = a_res
    cdef long long[:] src = a_src
    cdef Py_ssize_t nsrc = len(a_src)
    cdef long long[:] level = _zeros(n)
    cdef long long[:] queue = _zeros(n)
    cdef long long[:] it = _zeros(n)
    cdef long long[:] is_sink = _zeros(n)
    cdef long long[:] path = _zeros(n + 1)
    cdef Py_ssize_t plen, qh, qt, i, k, end, cut_at, si
    cdef long long u, v, a, cand, lu, limit, b, total = 0
    for v in sinks:
        is_sink[v] = 1
    while True:
        for i in range(n):
            level[i] = -1
        qh = 0
        qt = 0
        for si in range(nsrc):
            level[src[si]] = 0
            queue[qt] = src[si]
            qt += 1
        limit = n + 1
        while qh < qt:
            u = queue[qh]
            qh += 1
            lu = level[u]
            if is_sink[u]:
                limit = lu
                continue
            if lu >= limit:
                continue
            for k in range(ip[u], ip[u + 1]):
                a = ad[k]
                if res[a] > 0:
                    v = hd[a]
                    if level[v] < 0:
                        level[v] = lu + 1
                        queue[qt] = v
                        qt += 1
        if limit > n:
            break
        for i in range(n):
            it[i] = ip[i]
        for si in range(nsrc):
            plen = 0
            u = src[si]
            while True:
                if is_sink[u]:
                    b = res[path[0]]
                    for i in range(1, plen):
                        if res[path[i]] < b:
                            b = res[path[i]]
                    total += b
                    cut_at = -1
                    for i in range(plen):
                        a = path[i]
                        res[a] -= b
                        res[a ^ 1] += b
                        if cut_at < 0 and res[a] == 0:
                            cut_at = i
                    plen = cut_at
                    if plen > 0:
                        u = hd[path[plen - 1]]
                    else:
                        u = src[si]
                    continue
                lu = level[u] + 1
                end = ip[u + 1]
                k = it[u]
                a = -1
                while k < end:
                    cand = ad[k]
                    if res[cand] > 0 and level[hd[cand]] == lu:
                        a = cand
                        break
                    k += 1
                it[u] = k
                if a >= 0:
                    path[plen] = a
                    plen += 1
                    u = hd[a]
                elif plen == 0:
                    break
                else:
                    level[u] = -1
                    plen -= 1
                    a = path[plen]
                    u = hd[a ^ 1]
                    it[u] += 1
    return total, a_res


def reachable(Py_ssize_t n, const long long[:] ip, const long long[:] ad,
              const long long[:] hd, const long long[:] res, sources):
    cdef long long[:] stack = _zeros(n)
    cdef Py_ssize_t top = 0, k
    cdef long long u, v, a
    seen = bytearray(n)
    cdef unsigned char[:] sn = seen
    for v in sources:
        if not sn[v]:
            sn[v] = 1
            stack[top] = v
            top += 1
    while top > 0:
        top -= 1
        u = stack[top]
        for k in range(ip[u], ip[u + 1]):
            a = ad[k]
            if res[a] > 0:
                v = hd[a]
                if not sn[v]:
                    sn[v] = 1
                    stack[top] = v
                    top += 1
    return seen
