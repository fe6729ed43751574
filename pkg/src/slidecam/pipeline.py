"""End-to-end guard placement.

camera_cover chains the phases: reflex chords, domination prune,
intersection graph, exact minimum guarded cover of the grid, leftover
critical regions, and the edge-cover patch. The result covers the polygon
with at most 3.5 times the optimal number of cameras.

guarded_camera_cover returns the same cameras and additionally enforces
that every camera's track is watched by another camera (at most 2.5 times
the optimum of that harder problem). The only wrinkle is a grid with a
single track: nothing else can watch it, so by default the track is simply
staffed twice; allow_self_guard=True accepts the lone camera instead.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .critical import (
    RegionGraph,
    build_region_graph,
    candidate_guards,
    critical_regions,
    guards_from_cover,
    min_edge_cover,
)
from .errors import CoverageViolation, GuardednessViolation, NonStaircaseResidue
from .geom import OrthoPolygon, OrthoSegment, reflex_vertices
from .grid import Grid, IntersectionGraph, intersection_graph, prune_dominated, reflex_chords
from .guarded_cover import optimal_covers
from .region import RectilinearRegion
from .visibility import camera_guards_camera, covers_polygon

FROM_S = "from_S"
FROM_SC = "from_SC"


@dataclass(frozen=True)
class RunStats:
    vertex_count: int
    reflex_count: int
    chord_count: int
    grid_size: int
    cover_size: int
    critical_count: int
    patch_size: int
    phase_seconds: dict[str, float]


@dataclass(frozen=True)
class GuardSet:
    cameras: tuple[OrthoSegment, ...]
    provenance: tuple[str, ...]
    stats: RunStats


@dataclass(frozen=True)
class PipelineRun:
    """Every intermediate artifact, for reports, rendering and tests."""

    polygon: OrthoPolygon
    chords: tuple[OrthoSegment, ...]
    grid: Grid
    graph: IntersectionGraph
    chosen: tuple[int, ...]
    cover_segments: tuple[OrthoSegment, ...]
    regions: tuple[RectilinearRegion, ...]
    region_graph: RegionGraph | None
    cover_edges: tuple[tuple[int, int], ...]
    patch_segments: tuple[OrthoSegment, ...]
    stats: RunStats


def _left_edge_camera(P: OrthoPolygon) -> OrthoSegment:
    x0, y0, _x1, y1 = P.bbox()
    return OrthoSegment.vertical(x0, y0, y1)


def run_pipeline(P: OrthoPolygon) -> PipelineRun:
    timings: dict[str, float] = {}
    mark = time.perf_counter()

    def lap(name: str) -> None:
        nonlocal mark
        now = time.perf_counter()
        timings[name] = now - mark
        mark = now

    reflex = reflex_vertices(P)
    chords = tuple(reflex_chords(P))
    lap("chords")
    grid = prune_dominated(P, chords)
    lap("prune")
    graph = intersection_graph(grid)
    lap("graph")
    if not reflex:
        # A polygon without reflex vertices is a rectangle; one camera
        # along the left edge sweeps it and no grid machinery applies.
        chosen: tuple[int, ...] = ()
        cover_segments: tuple[OrthoSegment, ...] = (_left_edge_camera(P),)
        lap("cover")
        regions: tuple[RectilinearRegion, ...] = ()
    else:
        # Distinct optimal grid covers can leave different residues, and
        # not every one of them splits into staircases. Walk the optima in
        # index order and settle on the first whose leftover does; only if
        # none qualifies is the residue genuinely misshapen.
        first_error: NonStaircaseResidue | None = None
        chosen = ()
        cover_segments = ()
        regions = ()
        for attempt in optimal_covers(graph):
            candidate = tuple(grid.segments[i] for i in attempt)
            try:
                regions = tuple(critical_regions(P, candidate))
            except NonStaircaseResidue as err:
                if first_error is None:
                    first_error = err
                continue
            chosen = attempt
            cover_segments = candidate
            break
        else:
            assert first_error is not None
            raise first_error
        lap("cover")
    if regions:
        rg = build_region_graph(P, regions, candidate_guards(P, grid))
        cover_edges = tuple(min_edge_cover(rg))
        patch_segments = tuple(guards_from_cover(rg, cover_edges))
    else:
        rg = None
        cover_edges = ()
        patch_segments = ()
    lap("patch")

    stats = RunStats(
        vertex_count=P.n,
        reflex_count=len(reflex),
        chord_count=len(chords),
        grid_size=len(grid),
        cover_size=len(cover_segments),
        critical_count=len(regions),
        patch_size=len(patch_segments),
        phase_seconds=timings,
    )
    return PipelineRun(
        polygon=P,
        chords=chords,
        grid=grid,
        graph=graph,
        chosen=chosen,
        cover_segments=cover_segments,
        regions=regions,
        region_graph=rg,
        cover_edges=cover_edges,
        patch_segments=patch_segments,
        stats=stats,
    )


def merged_cameras(run: PipelineRun) -> tuple[tuple[OrthoSegment, ...], tuple[str, ...]]:
    """Dedup cover and patch cameras; a track in both counts as cover."""
    cover = set(run.cover_segments)
    cameras = sorted(cover | set(run.patch_segments))
    provenance = tuple(FROM_S if c in cover else FROM_SC for c in cameras)
    return tuple(cameras), provenance


def camera_cover(P: OrthoPolygon) -> GuardSet:
    """Cameras covering the whole polygon, at most 3.5x the optimum."""
    run = run_pipeline(P)
    cameras, provenance = merged_cameras(run)
    if not covers_polygon(P, cameras):
        raise CoverageViolation("camera set fails to cover the polygon")
    return GuardSet(cameras, provenance, run.stats)


def guarded_camera_cover(P: OrthoPolygon, allow_self_guard: bool = False) -> GuardSet:
    """Covering cameras whose tracks also watch each other, at most 2.5x
    the optimum of the guarded problem.

    Tracks in the cover pairwise intersect enough to watch each other, and
    every patch track crosses a cover track; both facts are re-verified here
    camera by camera. With one cover track and nothing else, the default is
    to staff the same track twice, since a lone camera has no distinct
    guard; allow_self_guard=True returns the single camera instead.
    """
    run = run_pipeline(P)
    cameras, provenance = merged_cameras(run)
    if not covers_polygon(P, cameras):
        raise CoverageViolation("camera set fails to cover the polygon")
    if len(cameras) == 1:
        if allow_self_guard:
            return GuardSet(cameras, provenance, run.stats)
        return GuardSet(cameras * 2, provenance * 2, run.stats)
    cover = set(run.cover_segments)
    for cam in cameras:
        pool = cover - {cam} if cam in cover else cover
        if not any(camera_guards_camera(P, g, cam) for g in pool):
            raise GuardednessViolation(f"no cover track watches {cam}")
    return GuardSet(cameras, provenance, run.stats)
