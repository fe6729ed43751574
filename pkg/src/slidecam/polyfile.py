"""Line-oriented polygon files.

Format: a header line with the vertex count, then one "x y" line per
vertex in boundary order, integers only. Blank lines are skipped and "#"
starts a comment anywhere on a line. The format round-trips bit-exactly
through format_polygon and parse_polygon.
"""

from __future__ import annotations

from .errors import ParseError
from .geom import OrthoPolygon, validate_polygon


def _payload_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_polygon(text: str) -> OrthoPolygon:
    lines = _payload_lines(text)
    if not lines:
        raise ParseError("empty polygon file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"bad vertex count line: {lines[0]!r}") from None
    if n < 0:
        raise ParseError("negative vertex count")
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} vertex lines, found {len(lines) - 1}")
    vertices = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"bad vertex line: {line!r}")
        try:
            vertices.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"non-integer coordinate: {line!r}") from None
    return validate_polygon(vertices)


def format_polygon(P: OrthoPolygon) -> str:
    lines = [str(P.n)]
    lines.extend(f"{v.x} {v.y}" for v in P.vertices)
    return "\n".join(lines) + "\n"
