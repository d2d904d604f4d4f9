# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset dynamic programming kernels.

Same contract as _kernels_py; that module is the readable reference.
Supports up to 16 vertices (the callers' guard), so subset tables fit in
64 KiB signed chars.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_ctz(unsigned int x)
    int __builtin_popcount(unsigned int x)


def treewidth_dp(masks):
    cdef int n = len(masks)
    if n == 0:
        return -1, []
    if n > 16:
        raise ValueError("kernel supports at most 16 vertices")
    cdef unsigned int adj[16]
    cdef int i
    for i in range(n):
        adj[i] = masks[i]
    cdef unsigned int full = (1u << n) - 1
    cdef signed char *value = <signed char *> malloc(full + 1)
    cdef signed char *choice = <signed char *> malloc(full + 1)
    if value == NULL or choice == NULL:
        free(value)
        free(choice)
        raise MemoryError()
    cdef unsigned int s, t, low, rest, comp, nb, frontier, f, fb, grow
    cdef int v, best, bestv, cand
    value[0] = -1
    for s in range(1u, full + 1):
        best = n
        bestv = -1
        t = s
        while t:
            low = t & (~t + 1)
            v = __builtin_ctz(low)
            t ^= low
            rest = s ^ low
            comp = low
            nb = adj[v]
            frontier = nb & s & ~comp
            while frontier:
                comp |= frontier
                grow = 0
                f = frontier
                while f:
                    fb = f & (~f + 1)
                    grow |= adj[__builtin_ctz(fb)]
                    f ^= fb
                nb |= grow
                frontier = nb & s & ~comp
            cand = __builtin_popcount(nb & ~s)
            if value[rest] > cand:
                cand = value[rest]
            if cand < best:
                best = cand
                bestv = v
        value[s] = <signed char> best
        choice[s] = <signed char> bestv
    result = value[full]
    order = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s ^= 1u << v
    free(value)
    free(choice)
    order.reverse()
    return result, order


def pathwidth_dp(masks):
    cdef int n = len(masks)
    if n == 0:
        return -1, []
    if n > 16:
        raise ValueError("kernel supports at most 16 vertices")
    cdef unsigned int adj[16]
    cdef int i
    for i in range(n):
        adj[i] = masks[i]
    cdef unsigned int full = (1u << n) - 1
    cdef signed char *value = <signed char *> malloc(full + 1)
    cdef signed char *choice = <signed char *> malloc(full + 1)
    if value == NULL or choice == NULL:
        free(value)
        free(choice)
        raise MemoryError()
    cdef unsigned int s, t, low
    cdef int v, boundary, best, bestv, cand
    value[0] = 0
    for s in range(1u, full + 1):
        boundary = 0
        best = n
        bestv = -1
        t = s
        while t:
            low = t & (~t + 1)
            v = __builtin_ctz(low)
            t ^= low
            if adj[v] & ~s:
                boundary += 1
            cand = value[s ^ low]
            if cand < best:
                best = cand
                bestv = v
        value[s] = <signed char> (boundary if boundary > best else best)
        choice[s] = <signed char> bestv
    result = value[full]
    order = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s ^= 1u << v
    free(value)
    free(choice)
    order.reverse()
    return result, order
