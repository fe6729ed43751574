"""Maximum matching and minimum edge cover on small general graphs.

Edmonds' blossom algorithm in the classic array formulation: repeatedly grow
alternating trees from free vertices, contracting odd cycles on the fly.
Deterministic given the vertex numbering. The graphs here are region graphs
with a handful of nodes, so clarity beats asymptotics.

Minimum edge cover comes from the standard reduction: take a maximum
matching, then cover each unmatched vertex with any incident edge. Vertices
with no incident edge can only be covered when the caller supplies a loop
for them.
"""

from __future__ import annotations

from .errors import UncoverableVertex


def max_cardinality_matching(n: int, edges) -> list[tuple[int, int]]:
    """Maximum matching of an undirected simple graph, as sorted pairs."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        if i == j:
            continue
        adj[i].append(j)
        adj[j].append(i)
    for a in adj:
        a.sort()
    match = [-1] * n
    p = [0] * n
    base = [0] * n
    used = [False] * n
    blossom = [False] * n

    def lca(a: int, b: int) -> int:
        used2 = [False] * n
        while True:
            a = base[a]
            used2[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if used2[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root: int) -> int:
        nonlocal used, p, base, blossom
        used = [False] * n
        p = [-1] * n
        for i in range(n):
            base[i] = i
        used[root] = True
        queue = [root]
        while queue:
            v = queue.pop(0)
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to)
                    mark_path(to, cur, v)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    for v in range(n):
        if match[v] != -1:
            continue
        u = find_path(v)
        while u != -1:
            pv = p[u]
            ppv = match[pv]
            match[u] = pv
            match[pv] = u
            u = ppv

    out = sorted((i, j) for i, j in enumerate(match) if j > i)
    return out


def min_edge_cover(n: int, edges, loops=()) -> list[tuple[int, int]]:
    """Smallest edge set touching every vertex.

    edges are simple (i != j); loops lists vertices allowed to cover
    themselves with a (v, v) entry, used for nodes that have no incident
    edge but are self-sufficient. A vertex with no incident edge and no loop
    raises UncoverableVertex. Among minimum covers the result is the one
    picking, for each unmatched vertex, its first incident edge in sorted
    edge order.
    """
    simple = sorted({(min(i, j), max(i, j)) for i, j in edges if i != j})
    loopset = set(loops)
    matching = max_cardinality_matching(n, simple)
    covered = [False] * n
    for i, j in matching:
        covered[i] = covered[j] = True
    cover = list(matching)
    incident: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e in simple:
        incident[e[0]].append(e)
        incident[e[1]].append(e)
    for v in range(n):
        if covered[v]:
            continue
        if incident[v]:
            e = incident[v][0]
            cover.append(e)
            covered[e[0]] = covered[e[1]] = True
        elif v in loopset:
            cover.append((v, v))
            covered[v] = True
        else:
            raise UncoverableVertex(f"vertex {v} has no incident edge")
    return sorted(cover)
