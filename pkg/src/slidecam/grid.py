"""The guarding grid: maximal chords through reflex vertices.

Every reflex vertex contributes its maximal horizontal and vertical chord.
A chord whose visible set is contained in the visible set of another chord
of the SAME orientation is redundant and gets pruned. Domination across
orientations never prunes: dropping a vertical chord because some
horizontal sees more would disconnect the grid (the survivors can end up
as parallel tracks that never touch), and connectedness is what the cover
solver's guardedness leans on. The survivors still cover the whole
polygon, and their pairwise crossings form the graph the solver works on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geom import (
    BOUNDARY,
    HORIZONTAL,
    VERTICAL,
    OrthoPolygon,
    OrthoSegment,
    Point,
    contains_point,
    max_chord,
    reflex_vertices,
)
from .region import region_contains
from .visibility import camera_visibility


@dataclass(frozen=True)
class Grid:
    """Pruned chord set. segments is sorted and duplicate-free; origins[i]
    lists the reflex vertices whose maximal chord is exactly segments[i]."""

    segments: tuple[OrthoSegment, ...]
    origins: tuple[tuple[Point, ...], ...]

    def __len__(self) -> int:
        return len(self.segments)


@dataclass(frozen=True)
class IntersectionGraph:
    """Undirected graph on track indices 0..n-1; edges sorted (i < j)."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return [sorted(a) for a in adj]

    def neighbor_masks(self) -> list[int]:
        masks = [0] * self.n
        for i, j in self.edges:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return masks


def reflex_chords(P: OrthoPolygon) -> list[OrthoSegment]:
    """Maximal H and V chords through every reflex vertex, sorted, deduped.

    Distinct chords of one orientation never intersect: two collinear
    maximal chords would have merged, and non-collinear parallel segments
    are disjoint by definition.
    """
    out = set()
    for v in reflex_vertices(P):
        out.add(max_chord(P, v, HORIZONTAL))
        out.add(max_chord(P, v, VERTICAL))
    return sorted(out)


def chord_origins(P: OrthoPolygon) -> dict[OrthoSegment, tuple[Point, ...]]:
    """Which reflex vertices generate each maximal chord."""
    out: dict[OrthoSegment, list[Point]] = {}
    for v in reflex_vertices(P):
        for o in (HORIZONTAL, VERTICAL):
            out.setdefault(max_chord(P, v, o), []).append(v)
    return {c: tuple(sorted(vs)) for c, vs in out.items()}


def prune_dominated(P: OrthoPolygon, chords) -> Grid:
    """Drop chords dominated by a chord of the same orientation.

    Mutually dominating chords (equal visible sets, same orientation) keep
    only the lexicographically smallest one. The union of visible sets is
    unchanged, so a cover of the pruned set still covers the polygon, and
    within each orientation the survivors form an antichain under
    domination. A horizontal survivor may well be dominated by a vertical
    one; that pair is kept deliberately (see the module docstring).
    """
    chords = sorted(set(chords))
    vis = {c: camera_visibility(P, c) for c in chords}
    rep: dict[object, OrthoSegment] = {}
    for c in chords:
        rep.setdefault((c.orientation, vis[c].rects), c)
    reps = sorted(rep.values())
    # Between distinct visible sets, containment forces a strictly larger
    # area, so the cheap area test filters most candidate dominators.
    area = {c: vis[c].area() for c in reps}
    kept = [
        c
        for c in reps
        if not any(
            d.orientation == c.orientation
            and area[d] > area[c]
            and region_contains(vis[d], vis[c])
            for d in reps
        )
    ]
    origin_map = chord_origins(P)
    origins = tuple(origin_map.get(c, ()) for c in kept)
    return Grid(tuple(kept), origins)


def guarding_grid(P: OrthoPolygon) -> Grid:
    """Convenience: reflex chords with the domination prune applied."""
    return prune_dominated(P, reflex_chords(P))


def _segments_of(g) -> tuple[OrthoSegment, ...]:
    return g.segments if isinstance(g, Grid) else tuple(g)


def intersection_graph(g) -> IntersectionGraph:
    """Closed pairwise intersections of a Grid (or raw segment list)."""
    segments = _segments_of(g)
    edges = []
    for i in range(len(segments)):
        for j in range(i + 1, len(segments)):
            if segments[i].intersects(segments[j]):
                edges.append((i, j))
    return IntersectionGraph(len(segments), tuple(edges))


def is_simple_grid(g, P: OrthoPolygon) -> bool:
    """Do all segment endpoints lie on the polygon boundary?

    For grids made of maximal chords this is exactly the outer-face and
    epsilon-extension condition of simple grids.
    """
    for s in _segments_of(g):
        if any(contains_point(P, e) != BOUNDARY for e in s.endpoints()):
            return False
    return True


def is_connected(g) -> bool:
    """Is the intersection graph connected? Empty and single-segment grids
    count as connected."""
    graph = g if isinstance(g, IntersectionGraph) else intersection_graph(g)
    if graph.n <= 1:
        return True
    adj = graph.adjacency()
    seen = {0}
    stack = [0]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == graph.n
