"""Exact integer geometry: points, axis-parallel segments, orthogonal polygons.

All coordinates are integers and every predicate is exact. Queries that need
half-integer resolution (slab midpoints, cell centers) run on coordinates
scaled by two, so nothing is ever rounded. Polygons are closed regions: the
boundary belongs to the polygon, and a segment may run along a boundary edge.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .errors import (
    CollinearRedundantVertex,
    NonOrthogonalEdge,
    NotClosed,
    PointOutside,
    SelfIntersecting,
)

HORIZONTAL = "H"
VERTICAL = "V"

INTERIOR = "interior"
BOUNDARY = "boundary"
OUTSIDE = "outside"


@dataclass(frozen=True, order=True)
class Point:
    x: int
    y: int


@dataclass(frozen=True, order=True)
class OrthoSegment:
    """Closed axis-parallel segment.

    `anchor` is the fixed coordinate (y for horizontal, x for vertical) and
    [lo, hi] is the span on the moving coordinate. Degenerate spans
    (lo == hi) are tolerated as intermediate values but are not valid camera
    tracks.

    Field order gives the (orientation, anchor, lo, hi) lexicographic order
    used for deterministic tie-breaking throughout the library.
    """

    orientation: str
    anchor: int
    lo: int
    hi: int

    def __post_init__(self):
        if self.orientation not in (HORIZONTAL, VERTICAL):
            raise ValueError(f"bad orientation: {self.orientation!r}")
        if self.lo > self.hi:
            raise ValueError("segment span is reversed")

    @classmethod
    def horizontal(cls, y: int, x0: int, x1: int) -> "OrthoSegment":
        return cls(HORIZONTAL, y, min(x0, x1), max(x0, x1))

    @classmethod
    def vertical(cls, x: int, y0: int, y1: int) -> "OrthoSegment":
        return cls(VERTICAL, x, min(y0, y1), max(y0, y1))

    @property
    def is_horizontal(self) -> bool:
        return self.orientation == HORIZONTAL

    @property
    def is_vertical(self) -> bool:
        return self.orientation == VERTICAL

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    @property
    def length(self) -> int:
        return self.hi - self.lo

    def endpoints(self) -> tuple[Point, Point]:
        if self.is_horizontal:
            return Point(self.lo, self.anchor), Point(self.hi, self.anchor)
        return Point(self.anchor, self.lo), Point(self.anchor, self.hi)

    def contains(self, p: Point) -> bool:
        if self.is_horizontal:
            return p.y == self.anchor and self.lo <= p.x <= self.hi
        return p.x == self.anchor and self.lo <= p.y <= self.hi

    def intersects(self, other: "OrthoSegment") -> bool:
        """Closed intersection test; touching endpoints count."""
        if self.orientation == other.orientation:
            return (
                self.anchor == other.anchor
                and max(self.lo, other.lo) <= min(self.hi, other.hi)
            )
        h, v = (self, other) if self.is_horizontal else (other, self)
        return h.lo <= v.anchor <= h.hi and v.lo <= h.anchor <= v.hi

    def transposed(self) -> "OrthoSegment":
        flipped = VERTICAL if self.is_horizontal else HORIZONTAL
        return OrthoSegment(flipped, self.anchor, self.lo, self.hi)

    def __str__(self) -> str:
        return f"{self.orientation} {self.anchor} {self.lo} {self.hi}"


class OrthoPolygon:
    """Simple rectilinear polygon, vertices in counterclockwise order.

    Instances are immutable by convention and should be built through
    validate_polygon; the constructor trusts its input. Derived structures
    (edge list, slab tables, the transposed twin) are cached lazily because
    the same polygon is queried many times during a solve.
    """

    __slots__ = ("vertices", "_cache")

    def __init__(self, vertices):
        self.vertices = tuple(vertices)
        self._cache = {}

    def __eq__(self, other) -> bool:
        return isinstance(other, OrthoPolygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        pts = ", ".join(f"({v.x},{v.y})" for v in self.vertices)
        return f"OrthoPolygon[{pts}]"

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[Point, Point]]:
        out = self._cache.get("edges")
        if out is None:
            vs = self.vertices
            out = [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]
            self._cache["edges"] = out
        return out

    def bbox(self) -> tuple[int, int, int, int]:
        out = self._cache.get("bbox")
        if out is None:
            xs = [v.x for v in self.vertices]
            ys = [v.y for v in self.vertices]
            out = (min(xs), min(ys), max(xs), max(ys))
            self._cache["bbox"] = out
        return out

    def vertex_xs(self) -> list[int]:
        out = self._cache.get("xs")
        if out is None:
            out = sorted({v.x for v in self.vertices})
            self._cache["xs"] = out
        return out

    def vertex_ys(self) -> list[int]:
        out = self._cache.get("ys")
        if out is None:
            out = sorted({v.y for v in self.vertices})
            self._cache["ys"] = out
        return out

    def transposed(self) -> "OrthoPolygon":
        """Mirror across the main diagonal (x and y swapped), still CCW."""
        out = self._cache.get("transposed")
        if out is None:
            swapped = [Point(v.y, v.x) for v in self.vertices]
            out = OrthoPolygon([swapped[0]] + swapped[1:][::-1])
            out._cache["transposed"] = self
            self._cache["transposed"] = out
        return out

    # -- slab tables (scaled coordinates) ----------------------------------

    def _columns(self):
        """Per-column interval tables of the closed region, scaled by two.

        Returns (XS, gaps, events). XS is the sorted list of scaled vertex
        x-coordinates. gaps[i] holds the closed y-intervals of the region on
        any vertical line strictly between XS[i] and XS[i+1]; events[i] holds
        them on the line x = XS[i] itself (the union of the closures of both
        adjacent gaps, which is exactly the closed region on that line).
        """
        out = self._cache.get("columns")
        if out is not None:
            return out
        XS = [2 * x for x in self.vertex_xs()]
        hedges = []
        for a, b in self.edges():
            if a.y == b.y:
                hedges.append((2 * a.y, 2 * min(a.x, b.x), 2 * max(a.x, b.x)))
        gaps = []
        for i in range(len(XS) - 1):
            X = XS[i] + 1
            ys = sorted(Y for Y, A, B in hedges if A < X < B)
            gaps.append(tuple((ys[k], ys[k + 1]) for k in range(0, len(ys), 2)))
        events = []
        for i in range(len(XS)):
            left = gaps[i - 1] if i > 0 else ()
            right = gaps[i] if i < len(gaps) else ()
            events.append(_merge_closed(list(left) + list(right)))
        out = (XS, gaps, events)
        self._cache["columns"] = out
        return out

    def _line_intervals(self, X: int):
        """Closed y-intervals of the region on the vertical line x = X/2."""
        XS, gaps, events = self._columns()
        if X < XS[0] or X > XS[-1]:
            return ()
        i = bisect_left(XS, X)
        if i < len(XS) and XS[i] == X:
            return events[i]
        return gaps[i - 1]

    def point_in_scaled(self, X: int, Y: int) -> bool:
        """Closed containment of the point (X/2, Y/2)."""
        for lo, hi in self._line_intervals(X):
            if lo > Y:
                return False
            if Y <= hi:
                return True
        return False

    def chord_scaled(self, X: int, Y: int, orientation: str):
        """Maximal inside interval through (X/2, Y/2), or None if outside.

        For VERTICAL the returned (lo, hi) is a y-range, for HORIZONTAL an
        x-range, both scaled by two.
        """
        if orientation == HORIZONTAL:
            return self.transposed().chord_scaled(Y, X, VERTICAL)
        for lo, hi in self._line_intervals(X):
            if lo > Y:
                return None
            if Y <= hi:
                return (lo, hi)
        return None


def _merge_closed(intervals):
    """Coalesce closed intervals; touching endpoints merge."""
    if not intervals:
        return ()
    intervals = sorted(intervals)
    out = [list(intervals[0])]
    for lo, hi in intervals[1:]:
        if lo <= out[-1][1]:
            out[-1][1] = max(out[-1][1], hi)
        else:
            out.append([lo, hi])
    return tuple((lo, hi) for lo, hi in out)


def _as_points(vertices) -> list[Point]:
    pts = []
    for v in vertices:
        if isinstance(v, Point):
            pts.append(v)
            continue
        x, y = v
        if not isinstance(x, int) or not isinstance(y, int):
            raise TypeError("vertex coordinates must be integers")
        pts.append(Point(x, y))
    return pts


def validate_polygon(vertices, collinear: str = "normalize") -> OrthoPolygon:
    """Check and normalize a vertex list into an OrthoPolygon.

    Accepts Points or (x, y) pairs, in either rotation order, optionally with
    the first vertex repeated at the end. The result is counterclockwise with
    no collinear redundant vertices. With collinear="reject" a redundant
    vertex raises CollinearRedundantVertex instead of being dropped.

    Raises NotClosed, NonOrthogonalEdge or SelfIntersecting on bad input.
    """
    if collinear not in ("normalize", "reject"):
        raise ValueError("collinear must be 'normalize' or 'reject'")
    pts = _as_points(vertices)
    if len(pts) >= 2 and pts[0] == pts[-1]:
        pts = pts[:-1]
    if len(pts) < 4:
        raise NotClosed("a rectilinear polygon needs at least 4 vertices")
    for i in range(len(pts)):
        a, b = pts[i], pts[(i + 1) % len(pts)]
        if a == b:
            raise NotClosed(f"zero-length edge at {a}")
        if a.x != b.x and a.y != b.y:
            raise NonOrthogonalEdge(f"edge {a} -> {b} is not axis-parallel")

    # Merge straight runs; a reversal inside a run means the boundary folds
    # back onto itself.
    changed = True
    while changed:
        changed = False
        n = len(pts)
        for i in range(n):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
            d1 = (b.x - a.x, b.y - a.y)
            d2 = (c.x - b.x, c.y - b.y)
            if (d1[0] == 0) == (d2[0] == 0):
                if d1[0] * d2[0] < 0 or d1[1] * d2[1] < 0:
                    raise SelfIntersecting(f"boundary doubles back at {b}")
                if collinear == "reject":
                    raise CollinearRedundantVertex(f"redundant vertex {b}")
                del pts[i]
                changed = True
                break
        if len(pts) < 4:
            raise NotClosed("polygon degenerates after removing redundant vertices")

    if len(set(pts)) != len(pts):
        raise SelfIntersecting("repeated vertex")

    n = len(pts)
    segs = []
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        if a.y == b.y:
            segs.append(OrthoSegment.horizontal(a.y, a.x, b.x))
        else:
            segs.append(OrthoSegment.vertical(a.x, a.y, b.y))
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            if segs[i].intersects(segs[j]):
                raise SelfIntersecting(
                    f"edges {pts[i]}->{pts[(i + 1) % n]} and "
                    f"{pts[j]}->{pts[(j + 1) % n]} touch"
                )

    area2 = 0
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        area2 += a.x * b.y - b.x * a.y
    if area2 == 0:
        raise SelfIntersecting("polygon has zero area")
    if area2 < 0:
        pts = [pts[0]] + pts[1:][::-1]
    return OrthoPolygon(pts)


def reflex_vertices(P: OrthoPolygon) -> list[Point]:
    """Vertices with a 270 degree interior angle, in boundary order."""
    vs = P.vertices
    out = []
    for i in range(len(vs)):
        a, b, c = vs[i - 1], vs[i], vs[(i + 1) % len(vs)]
        cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)
        if cross < 0:
            out.append(b)
    return out


def contains_point(P: OrthoPolygon, p: Point) -> str:
    """Classify p as INTERIOR, BOUNDARY or OUTSIDE. Exact."""
    for a, b in P.edges():
        if a.y == b.y:
            if p.y == a.y and min(a.x, b.x) <= p.x <= max(a.x, b.x):
                return BOUNDARY
        else:
            if p.x == a.x and min(a.y, b.y) <= p.y <= max(a.y, b.y):
                return BOUNDARY
    return INTERIOR if P.point_in_scaled(2 * p.x, 2 * p.y) else OUTSIDE


def max_chord(P: OrthoPolygon, p: Point, orientation: str) -> OrthoSegment:
    """Maximal axis-parallel segment through p inside the closed polygon.

    The chord may run along a boundary edge or pass through a boundary seam
    between two parts of the polygon; at a convex corner it may be exactly an
    edge. Raises PointOutside when p is not in the polygon.
    """
    if contains_point(P, p) == OUTSIDE:
        raise PointOutside(f"{p} is outside the polygon")
    iv = P.chord_scaled(2 * p.x, 2 * p.y, orientation)
    assert iv is not None
    lo, hi = iv
    if orientation == HORIZONTAL:
        return OrthoSegment.horizontal(p.y, lo // 2, hi // 2)
    return OrthoSegment.vertical(p.x, lo // 2, hi // 2)
