"""Sliding-camera guard placement for simple orthogonal polygons.

A sliding camera patrols an axis-parallel track inside the polygon and sees
every point it can reach by a perpendicular segment that stays inside. The
library computes a small set of such cameras covering the whole polygon,
with a proven factor of 3.5 of the optimum (2.5 for the variant where every
camera's track must itself be watched), plus the exact solvers, region
algebra and brute-force oracles backing those guarantees.
"""

from .errors import (
    CollinearRedundantVertex,
    CoverageViolation,
    GuardednessViolation,
    Infeasible,
    NonOrthogonalEdge,
    NonStaircaseResidue,
    NotClosed,
    ParseError,
    PointOutside,
    PolygonError,
    SegmentNotInside,
    SelfIntersecting,
    SlidecamError,
    TooLarge,
    UncoverableVertex,
    UnguardableRegion,
)
from .geom import (
    BOUNDARY,
    HORIZONTAL,
    INTERIOR,
    OUTSIDE,
    VERTICAL,
    OrthoPolygon,
    OrthoSegment,
    Point,
    contains_point,
    max_chord,
    reflex_vertices,
    validate_polygon,
)
from .region import (
    EMPTY_REGION,
    RectilinearRegion,
    from_rects,
    polygon_region,
    region_components,
    region_contains,
    region_difference,
    region_intersection,
    region_union,
    region_union_all,
)
from .visibility import (
    camera_guards_camera,
    camera_visibility,
    covers_polygon,
    dominates,
    guards_entirely,
    visible_union,
)
from .grid import (
    Grid,
    IntersectionGraph,
    chord_origins,
    guarding_grid,
    intersection_graph,
    is_connected,
    is_simple_grid,
    prune_dominated,
    reflex_chords,
)
from .guarded_cover import is_guarded_cover, minimum_guarded_cover, optimal_covers
from .matching import max_cardinality_matching, min_edge_cover
from .critical import (
    RegionGraph,
    build_region_graph,
    candidate_guards,
    critical_regions,
    guards_from_cover,
    is_staircase,
    uncovered_region,
)
from .pipeline import (
    FROM_S,
    FROM_SC,
    GuardSet,
    PipelineRun,
    RunStats,
    camera_cover,
    guarded_camera_cover,
    merged_cameras,
    run_pipeline,
)
from .oracles import opt_cameras, opt_grid_cover, opt_guarded_cameras, opt_region_cover
from .generator import generate_polygon
from .polyfile import format_polygon, parse_polygon
from .svg import render_run

__all__ = [
    "BOUNDARY",
    "CollinearRedundantVertex",
    "CoverageViolation",
    "EMPTY_REGION",
    "FROM_S",
    "FROM_SC",
    "Grid",
    "GuardSet",
    "GuardednessViolation",
    "HORIZONTAL",
    "INTERIOR",
    "Infeasible",
    "IntersectionGraph",
    "NonOrthogonalEdge",
    "NonStaircaseResidue",
    "NotClosed",
    "OUTSIDE",
    "OrthoPolygon",
    "OrthoSegment",
    "ParseError",
    "PipelineRun",
    "Point",
    "PointOutside",
    "PolygonError",
    "RectilinearRegion",
    "RegionGraph",
    "RunStats",
    "SegmentNotInside",
    "SelfIntersecting",
    "SlidecamError",
    "TooLarge",
    "UncoverableVertex",
    "UnguardableRegion",
    "VERTICAL",
    "build_region_graph",
    "camera_cover",
    "camera_guards_camera",
    "camera_visibility",
    "candidate_guards",
    "chord_origins",
    "contains_point",
    "covers_polygon",
    "critical_regions",
    "dominates",
    "format_polygon",
    "from_rects",
    "generate_polygon",
    "guarded_camera_cover",
    "guarding_grid",
    "guards_entirely",
    "guards_from_cover",
    "intersection_graph",
    "is_connected",
    "is_guarded_cover",
    "is_simple_grid",
    "is_staircase",
    "max_cardinality_matching",
    "max_chord",
    "merged_cameras",
    "min_edge_cover",
    "minimum_guarded_cover",
    "opt_cameras",
    "opt_grid_cover",
    "opt_guarded_cameras",
    "opt_region_cover",
    "optimal_covers",
    "parse_polygon",
    "polygon_region",
    "prune_dominated",
    "reflex_chords",
    "reflex_vertices",
    "region_components",
    "region_contains",
    "region_difference",
    "region_intersection",
    "region_union",
    "region_union_all",
    "run_pipeline",
    "uncovered_region",
    "validate_polygon",
    "visible_union",
]
