"""Exception hierarchy.

Geometry validation errors signal bad input; the *Violation / *Residue
errors are internal assertion failures and indicate a bug when raised on
valid input.
"""


class SlidecamError(Exception):
    """Base class for all library errors."""


class PolygonError(SlidecamError):
    """Invalid polygon input."""


class NonOrthogonalEdge(PolygonError):
    """An edge is neither horizontal nor vertical."""


class NotClosed(PolygonError):
    """Boundary is degenerate: too few vertices or a zero-length edge."""


class SelfIntersecting(PolygonError):
    """Boundary touches or crosses itself."""


class CollinearRedundantVertex(PolygonError):
    """A vertex lies in the middle of a straight boundary run (strict mode)."""


class PointOutside(SlidecamError):
    """Query point lies outside the polygon."""


class SegmentNotInside(SlidecamError):
    """Camera track is not fully contained in the polygon."""


class ParseError(SlidecamError):
    """Malformed polygon file."""


class Infeasible(SlidecamError):
    """Grid cover problem has no feasible solution."""


class NonStaircaseResidue(SlidecamError):
    """An unguarded component is not a staircase region."""


class UnguardableRegion(SlidecamError):
    """No candidate segment sees an unguarded component in full."""


class UncoverableVertex(SlidecamError):
    """Edge cover requested on a node with no incident edge or loop."""


class GuardednessViolation(SlidecamError):
    """A placed camera is not watched by any other camera."""


class CoverageViolation(SlidecamError):
    """Placed cameras fail to see the whole polygon."""


class TooLarge(SlidecamError):
    """Instance exceeds the cap for exhaustive optimum computation."""
