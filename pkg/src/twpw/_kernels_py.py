"""Pure-Python subset dynamic programming kernels.

Both kernels take a dense adjacency-mask list (bit j of masks[i] set when
vertices i and j are adjacent) and return the exact parameter value plus an
optimal vertex ordering as index lists.  The compiled extension in
_speedups.pyx implements the same contract; keep the two in sync.
"""

from __future__ import annotations


def treewidth_dp(masks: list[int]) -> tuple[int, list[int]]:
    """Exact tree-width via elimination orderings over vertex subsets.

    value[S] is the best possible maximum fill-degree when the vertices of
    S are eliminated first, minimized over orderings of S; the answer is
    value[V].  Returns (tree-width, elimination order), (-1, []) for the
    empty graph.
    """
    n = len(masks)
    if n == 0:
        return -1, []
    full = (1 << n) - 1
    value = [0] * (full + 1)
    choice = [0] * (full + 1)
    value[0] = -1
    for s in range(1, full + 1):
        best = n
        bestv = -1
        t = s
        while t:
            low = t & -t
            v = low.bit_length() - 1
            t ^= low
            rest = s ^ low
            # q = neighbors, outside s, of the component of v induced on s
            allowed = s
            comp = low
            nb = masks[v]
            frontier = nb & allowed & ~comp
            while frontier:
                comp |= frontier
                grow = 0
                f = frontier
                while f:
                    fb = f & -f
                    grow |= masks[fb.bit_length() - 1]
                    f ^= fb
                nb |= grow
                frontier = nb & allowed & ~comp
            cand = (nb & ~allowed).bit_count()
            if value[rest] > cand:
                cand = value[rest]
            if cand < best:
                best = cand
                bestv = v
        value[s] = best
        choice[s] = bestv
    order = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s ^= 1 << v
    order.reverse()
    return value[full], order


def pathwidth_dp(masks: list[int]) -> tuple[int, list[int]]:
    """Exact path-width via the vertex separation number.

    value[S] = max(boundary(S), min over v in S of value[S - v]) where
    boundary(S) counts vertices of S with a neighbor outside S; the vertex
    separation number value[V] equals the path-width.  Returns
    (path-width, placement order), (-1, []) for the empty graph.
    """
    n = len(masks)
    if n == 0:
        return -1, []
    full = (1 << n) - 1
    value = [0] * (full + 1)
    choice = [0] * (full + 1)
    for s in range(1, full + 1):
        boundary = 0
        best = n
        bestv = -1
        t = s
        while t:
            low = t & -t
            v = low.bit_length() - 1
            t ^= low
            if masks[v] & ~s:
                boundary += 1
            cand = value[s ^ low]
            if cand < best:
                best = cand
                bestv = v
        value[s] = boundary if boundary > best else best
        choice[s] = bestv
    order = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s ^= 1 << v
    order.reverse()
    return value[full], order
