"""Static SVG rendering of a solved instance.

One diagram: the polygon outline, all grid tracks faint, the chosen cover
tracks solid, patch tracks dashed, and any leftover critical regions
hatched. Output is a deterministic function of the run.
"""

from __future__ import annotations

from .pipeline import PipelineRun

_SCALE = 24
_MARGIN = 1


def render_run(run: PipelineRun) -> str:
    P = run.polygon
    x0, y0, x1, y1 = P.bbox()
    w = (x1 - x0 + 2 * _MARGIN) * _SCALE
    h = (y1 - y0 + 2 * _MARGIN) * _SCALE

    def px(x: int) -> int:
        return (x - x0 + _MARGIN) * _SCALE

    def py(y: int) -> int:
        return (y1 - y + _MARGIN) * _SCALE

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        "<defs>",
        '<pattern id="hatch" width="6" height="6" patternUnits="userSpaceOnUse">',
        '<path d="M0 6 L6 0" stroke="#b2433f" stroke-width="1.2"/>',
        "</pattern>",
        "</defs>",
    ]
    outline = " ".join(
        f"{'M' if i == 0 else 'L'} {px(v.x)} {py(v.y)}"
        for i, v in enumerate(P.vertices)
    )
    parts.append(
        f'<path d="{outline} Z" fill="#f4f1e8" stroke="#27313b" stroke-width="2"/>'
    )
    for region in run.regions:
        for rx0, rx1, ry0, ry1 in region.rects:
            parts.append(
                f'<rect x="{px(rx0)}" y="{py(ry1)}" width="{(rx1 - rx0) * _SCALE}" '
                f'height="{(ry1 - ry0) * _SCALE}" fill="url(#hatch)" '
                'stroke="#b2433f" stroke-width="0.6"/>'
            )

    def line(seg, style: str) -> str:
        (a, b) = seg.endpoints()
        return (
            f'<line x1="{px(a.x)}" y1="{py(a.y)}" x2="{px(b.x)}" y2="{py(b.y)}" '
            f"{style}/>"
        )

    cover = set(run.cover_segments)
    patch = set(run.patch_segments)
    for seg in run.grid.segments:
        if seg in cover or seg in patch:
            continue
        parts.append(line(seg, 'stroke="#9aa7b1" stroke-width="1" stroke-dasharray="2 3"'))
    for seg in sorted(patch - cover):
        parts.append(line(seg, 'stroke="#b2433f" stroke-width="2.5" stroke-dasharray="7 4"'))
    for seg in run.cover_segments:
        parts.append(line(seg, 'stroke="#b2433f" stroke-width="3"'))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
