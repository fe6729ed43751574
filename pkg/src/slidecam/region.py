"""Canonical rectilinear regions and exact set algebra on them.

A RectilinearRegion is a finite union of closed axis-parallel rectangles
with positive area, stored in a canonical slab form: rectangles are split on
the sorted x-events, y-intervals are merged per slab, and adjacent slabs
with identical interval stacks are re-joined. Two regions are equal as point
sets exactly when their canonical rect tuples are equal, so regions can be
hashed and compared directly.

The algebra is regularized: degenerate slivers (zero width or height) are
dropped by construction, and difference is the closure of the open
difference. Containment, emptiness and connectivity are exact for the
closed regions represented.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geom import OrthoPolygon, _merge_closed

Rect = tuple[int, int, int, int]  # (x0, x1, y0, y1), closed


@dataclass(frozen=True)
class RectilinearRegion:
    rects: tuple[Rect, ...]

    @property
    def is_empty(self) -> bool:
        return not self.rects

    def area(self) -> int:
        return sum((x1 - x0) * (y1 - y0) for x0, x1, y0, y1 in self.rects)

    def bbox(self) -> Rect:
        if not self.rects:
            raise ValueError("empty region has no bounding box")
        return (
            min(r[0] for r in self.rects),
            max(r[1] for r in self.rects),
            min(r[2] for r in self.rects),
            max(r[3] for r in self.rects),
        )

    def transposed(self) -> "RectilinearRegion":
        return from_rects((y0, y1, x0, x1) for x0, x1, y0, y1 in self.rects)

    def contains_point_scaled(self, X: int, Y: int) -> bool:
        """Closed containment of (X/2, Y/2)."""
        return any(
            2 * x0 <= X <= 2 * x1 and 2 * y0 <= Y <= 2 * y1
            for x0, x1, y0, y1 in self.rects
        )


EMPTY_REGION = RectilinearRegion(())


def from_rects(rects) -> RectilinearRegion:
    """Canonicalize an arbitrary rect collection into a region."""
    rects = [r for r in rects if r[0] < r[1] and r[2] < r[3]]
    if not rects:
        return EMPTY_REGION
    xs = sorted({x for r in rects for x in (r[0], r[1])})
    columns = []
    for i in range(len(xs) - 1):
        x0, x1 = xs[i], xs[i + 1]
        ivs = _merge_closed(
            [(r[2], r[3]) for r in rects if r[0] <= x0 and x1 <= r[1]]
        )
        columns.append((x0, x1, ivs))
    merged = []
    for x0, x1, ivs in columns:
        if merged and merged[-1][1] == x0 and merged[-1][2] == ivs:
            merged[-1] = (merged[-1][0], x1, ivs)
        else:
            merged.append((x0, x1, ivs))
    out = []
    for x0, x1, ivs in merged:
        for y0, y1 in ivs:
            out.append((x0, x1, y0, y1))
    return RectilinearRegion(tuple(out))


def region_union(a: RectilinearRegion, b: RectilinearRegion) -> RectilinearRegion:
    return from_rects(a.rects + b.rects)


def region_union_all(regions) -> RectilinearRegion:
    rects = []
    for r in regions:
        rects.extend(r.rects)
    return from_rects(rects)


def _subtract_1d(ivs, cuts):
    """Closed intervals ivs minus closed intervals cuts, regularized.

    Leftover pieces of zero length are dropped; a cut that only grazes an
    endpoint removes nothing.
    """
    out = []
    for lo, hi in ivs:
        pieces = [(lo, hi)]
        for clo, chi in cuts:
            nxt = []
            for plo, phi in pieces:
                if chi <= plo or clo >= phi:
                    nxt.append((plo, phi))
                    continue
                if plo < clo:
                    nxt.append((plo, clo))
                if chi < phi:
                    nxt.append((chi, phi))
            pieces = nxt
        out.extend(p for p in pieces if p[0] < p[1])
    return out


def region_difference(a: RectilinearRegion, b: RectilinearRegion) -> RectilinearRegion:
    """Regularized difference: the closure of interior(a) minus b."""
    if a.is_empty or b.is_empty:
        return a
    xs = sorted(
        {x for r in a.rects for x in (r[0], r[1])}
        | {x for r in b.rects for x in (r[0], r[1])}
    )
    out = []
    for i in range(len(xs) - 1):
        x0, x1 = xs[i], xs[i + 1]
        a_ivs = _merge_closed(
            [(r[2], r[3]) for r in a.rects if r[0] <= x0 and x1 <= r[1]]
        )
        if not a_ivs:
            continue
        b_ivs = _merge_closed(
            [(r[2], r[3]) for r in b.rects if r[0] <= x0 and x1 <= r[1]]
        )
        for y0, y1 in _subtract_1d(a_ivs, b_ivs):
            out.append((x0, x1, y0, y1))
    return from_rects(out)


def region_intersection(a: RectilinearRegion, b: RectilinearRegion) -> RectilinearRegion:
    out = []
    for ax0, ax1, ay0, ay1 in a.rects:
        for bx0, bx1, by0, by1 in b.rects:
            x0, x1 = max(ax0, bx0), min(ax1, bx1)
            y0, y1 = max(ay0, by0), min(ay1, by1)
            if x0 < x1 and y0 < y1:
                out.append((x0, x1, y0, y1))
    return from_rects(out)


def region_contains(a: RectilinearRegion, b: RectilinearRegion) -> bool:
    """Point-set containment b subseteq a (both regular closed)."""
    return region_difference(b, a).is_empty


def region_components(r: RectilinearRegion) -> list[RectilinearRegion]:
    """Edge-connected components; rects that only share a corner are split.

    Components are returned sorted by their canonical rect tuples.
    """
    rects = r.rects
    n = len(rects)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj

    for i in range(n):
        x0, x1, y0, y1 = rects[i]
        for j in range(i + 1, n):
            u0, u1, v0, v1 = rects[j]
            # Canonical form guarantees rects in one column are disjoint, so
            # only rects of touching columns can share positive-length border.
            if x1 == u0 or u1 == x0:
                if min(y1, v1) > max(y0, v0):
                    union(i, j)
    groups: dict[int, list[Rect]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(rects[i])
    comps = [from_rects(g) for g in groups.values()]
    comps.sort(key=lambda c: c.rects)
    return comps


def polygon_region(P: OrthoPolygon) -> RectilinearRegion:
    """The closed polygon as a canonical region."""
    out = P._cache.get("region")
    if out is None:
        XS, gaps, _events = P._columns()
        rects = []
        for i in range(len(XS) - 1):
            for Y0, Y1 in gaps[i]:
                rects.append((XS[i] // 2, XS[i + 1] // 2, Y0 // 2, Y1 // 2))
        out = from_rects(rects)
        P._cache["region"] = out
    return out


def segment_region(seg) -> RectilinearRegion:
    """Degenerate helper: a thin region is not representable, so callers
    that need 'does the region touch this segment' should use exact segment
    arithmetic instead. Provided only to fail loudly."""
    raise TypeError("segments have no area; use exact segment predicates")


def region_cells(r: RectilinearRegion):
    """Unit-refinement cells (x0, x1, y0, y1) of the region, each a grid cell
    of the arrangement induced by the region's own rect boundaries."""
    xs = sorted({x for rect in r.rects for x in (rect[0], rect[1])})
    ys = sorted({y for rect in r.rects for y in (rect[2], rect[3])})
    cells = []
    for i in range(len(xs) - 1):
        for j in range(len(ys) - 1):
            cx = xs[i] + xs[i + 1]
            cy = ys[j] + ys[j + 1]
            if r.contains_point_scaled(cx, cy):
                cells.append((xs[i], xs[i + 1], ys[j], ys[j + 1]))
    return cells
