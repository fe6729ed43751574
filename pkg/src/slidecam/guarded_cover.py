"""Exact minimum guarded cover on an intersection graph.

A guarded cover is a subset S of tracks such that every track has a
neighbor in S (tracks in S included, so cameras in S watch each other).
Tracks with no neighbors at all cannot satisfy that; they are forced into S
and exempted from the neighbor rule, since nothing could ever watch them.

The solver is exact and returns the lexicographically smallest optimum as a
sorted index tuple. It runs iterative deepening on the subset size with a
coverage-count bound, then rebuilds the answer one smallest feasible index
at a time. Sizes involved here are small (a few dozen tracks), so bitmask
search is the right tool.
"""

from __future__ import annotations

from .grid import IntersectionGraph


def _search(adj: list[int], full: int, left: int, dominated: int, allowed: int) -> bool:
    """Can `left` more picks from `allowed` dominate everything in `full`?"""
    undom = full & ~dominated
    if undom == 0:
        return True
    if left == 0:
        return False
    # Every missing node needs an allowed neighbor picked eventually; branch
    # later on the one with the fewest options.
    pick_node = -1
    pick_cover = -1
    m = undom
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        cand = adj[v] & allowed
        if cand == 0:
            return False
        c = bin(cand).count("1")
        if pick_node < 0 or c < pick_cover:
            pick_node, pick_cover = v, c
    # Bound: one pick newly dominates at most cover_max missing nodes.
    cover_max = 0
    m = allowed
    while m:
        u = (m & -m).bit_length() - 1
        m &= m - 1
        w = bin(adj[u] & undom).count("1")
        if w > cover_max:
            cover_max = w
    if cover_max == 0 or bin(undom).count("1") > left * cover_max:
        return False
    # Branch on the most constrained missing node: one of its allowed
    # neighbors must be picked.
    cand = adj[pick_node] & allowed
    while cand:
        u = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        if _search(adj, full, left - 1, dominated | adj[u], allowed & ~(1 << u)):
            return True
    return False


def optimal_covers(graph: IntersectionGraph):
    """Yield every minimum guarded cover, smallest index tuple first.

    All optima share the same forced isolated nodes, so sorting them in
    keeps the lexicographic order of the yielded tuples intact. Callers
    that only need one answer should stop after the first item; the full
    enumeration exists for downstream phases that must pick an optimum
    with extra geometric properties.
    """
    n = graph.n
    if n == 0:
        yield ()
        return
    adj = graph.neighbor_masks()
    isolated = [v for v in range(n) if adj[v] == 0]
    rest = [v for v in range(n) if adj[v] != 0]
    if not rest:
        yield tuple(isolated)
        return
    full = 0
    for v in rest:
        full |= 1 << v
    allowed0 = full

    max_deg = max(bin(adj[v]).count("1") for v in rest)
    lower = max(2 if len(rest) >= 2 else 1, -(-len(rest) // max_deg))
    k = lower
    while not _search(adj, full, k, 0, allowed0):
        k += 1

    picks: list[int] = []

    def emit(dominated: int, allowed: int):
        if len(picks) == k:
            yield tuple(sorted(isolated + picks))
            return
        m = allowed
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            nxt_allowed = allowed & ~((1 << (j + 1)) - 1)
            if _search(adj, full, k - len(picks) - 1, dominated | adj[j], nxt_allowed):
                picks.append(j)
                yield from emit(dominated | adj[j], nxt_allowed)
                picks.pop()

    yield from emit(0, allowed0)


def minimum_guarded_cover(graph: IntersectionGraph) -> tuple[int, ...]:
    """Smallest S with every node adjacent to S, isolated nodes forced.

    Ties in size resolve to the lexicographically smallest sorted tuple.
    """
    return next(optimal_covers(graph))


def is_guarded_cover(graph: IntersectionGraph, chosen) -> bool:
    """Independent check: every node outside S has a neighbor in S, every
    node of S has a neighbor in S unless it is isolated in the whole graph."""
    n = graph.n
    adj = graph.neighbor_masks()
    smask = 0
    for v in chosen:
        if not (0 <= v < n):
            return False
        smask |= 1 << v
    for v in range(n):
        if adj[v] == 0:
            if not (smask >> v) & 1:
                return False
            continue
        if adj[v] & smask == 0:
            return False
    return True
