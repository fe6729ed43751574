"""Random simple orthogonal polygons by cell aggregation.

Grow a 4-connected, hole-free set of unit grid cells, refusing any cell
that would make two parts of the blob touch at a corner, then trace the
boundary. Simplicity never needs checking afterwards: it holds by
construction. Growth stops exactly when the boundary has the requested
number of vertices, which changes by an even amount per cell, so any even
target from 4 up is reachable; a seed-derived retry covers runs that
overshoot and strand themselves.
"""

from __future__ import annotations

import random

from .geom import OrthoPolygon, Point, validate_polygon

_ORTHO = ((1, 0), (-1, 0), (0, 1), (0, -1))
_RING = ((0, 1), (1, 1), (1, 0), (1, -1), (0, -1), (-1, -1), (-1, 0), (-1, 1))


def _corner_delta(cells, x, y):
    """Vertex-count change at the four lattice corners of adding cell (x,y)."""
    delta = 0
    for cx, cy in ((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)):
        occ = sum(
            (cx + dx, cy + dy) in cells
            for dx, dy in ((0, 0), (-1, 0), (0, -1), (-1, -1))
        )
        # occ counts neighbors before the addition; the corner gains one.
        # 0->1 and 2->3 create a vertex, 1->2 and 3->4 remove one (the
        # diagonal 2-pattern cannot occur: pinches are rejected outright).
        delta += 1 if occ in (0, 2) else -1
    return delta


def _pinched(cells, x, y):
    for dx, dy in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        if (
            (x + dx, y + dy) in cells
            and (x + dx, y) not in cells
            and (x, y + dy) not in cells
        ):
            return True
    return False


def _creates_hole(cells, x, y):
    """Would adding (x,y) seal off an empty pocket?

    Cheap test first: if the occupied cells in the 8-ring around (x,y) form
    a single contiguous arc, the surrounding empty space stays connected.
    Otherwise flood each empty orthogonal neighbor and require escape past
    the blob's bounding box.
    """
    ring = [(x + dx, y + dy) in cells for dx, dy in _RING]
    arcs = sum(ring[i] and not ring[i - 1] for i in range(8))
    if arcs <= 1:
        return False
    xs = [c[0] for c in cells]
    ys = [c[1] for c in cells]
    lo_x, hi_x = min(xs) - 1, max(xs) + 1
    lo_y, hi_y = min(ys) - 1, max(ys) + 1
    blocked = cells | {(x, y)}
    for dx, dy in _ORTHO:
        start = (x + dx, y + dy)
        if start in blocked:
            continue
        seen = {start}
        stack = [start]
        escaped = False
        while stack:
            cx, cy = stack.pop()
            if cx < lo_x or cx > hi_x or cy < lo_y or cy > hi_y:
                escaped = True
                break
            for ex, ey in _ORTHO:
                nxt = (cx + ex, cy + ey)
                if nxt not in blocked and nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if not escaped:
            return True
    return False


def _trace(cells) -> list[Point]:
    """CCW boundary of a pinch-free, hole-free cell set, collinear merged."""
    edges = {}
    for x, y in cells:
        if (x, y - 1) not in cells:
            edges[(x, y)] = (x + 1, y)
        if (x + 1, y) not in cells:
            edges[(x + 1, y)] = (x + 1, y + 1)
        if (x, y + 1) not in cells:
            edges[(x + 1, y + 1)] = (x, y + 1)
        if (x - 1, y) not in cells:
            edges[(x, y + 1)] = (x, y)
    start = min(edges)
    walk = [start]
    cur = edges[start]
    while cur != start:
        walk.append(cur)
        cur = edges[cur]
    assert len(walk) == len(edges), "boundary is a single cycle by construction"
    out = []
    for i, p in enumerate(walk):
        a = walk[i - 1]
        b = walk[(i + 1) % len(walk)]
        if (a[0] == p[0] == b[0]) or (a[1] == p[1] == b[1]):
            continue
        out.append(p)
    return [Point(x, y) for x, y in out]


def _attempt(rng: random.Random, target: int, max_cells: int):
    cells = {(0, 0)}
    vcount = 4
    frontier = {(1, 0), (-1, 0), (0, 1), (0, -1)}
    while vcount != target and len(cells) < max_cells:
        candidates = sorted(frontier)
        rng.shuffle(candidates)
        placed = False
        for c in candidates:
            x, y = c
            if _pinched(cells, x, y) or _creates_hole(cells, x, y):
                continue
            delta = _corner_delta(cells, x, y)
            if vcount + delta > target:
                continue
            cells.add(c)
            vcount += delta
            frontier.discard(c)
            for dx, dy in _ORTHO:
                n = (x + dx, y + dy)
                if n not in cells:
                    frontier.add(n)
            placed = True
            break
        if not placed:
            return None
    if vcount != target:
        return None
    return cells


def generate_polygon(seed: int, vertices: int) -> OrthoPolygon:
    """Deterministic random polygon with exactly the given vertex count.

    vertices must be even and at least 4. The polygon is translated so its
    bounding box starts at the origin.
    """
    if vertices < 4 or vertices % 2:
        raise ValueError("vertex count must be even and at least 4")
    max_cells = max(16, 4 * vertices)
    for attempt in range(200):
        rng = random.Random(seed * 1000003 + attempt)
        cells = _attempt(rng, vertices, max_cells)
        if cells is not None:
            pts = _trace(cells)
            min_x = min(p.x for p in pts)
            min_y = min(p.y for p in pts)
            shifted = [Point(p.x - min_x, p.y - min_y) for p in pts]
            return validate_polygon(shifted)
    raise RuntimeError(f"gave up generating a {vertices}-vertex polygon")
