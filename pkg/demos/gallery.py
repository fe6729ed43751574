"""Render a handful of solved polygons to SVG.

Writes demos/gallery/<name>.svg for a few named shapes plus some generated
ones. Open the files in a browser: polygon outline, grid tracks, chosen
cameras, patch cameras, and any leftover region are drawn in distinct
styles.

    python3 demos/gallery.py
"""

import pathlib

import slidecam as sc

EAR = [
    (0, 1), (1, 1), (1, 2), (3, 2), (3, 0), (4, 0),
    (4, 1), (5, 1), (5, 2), (4, 2), (4, 3), (6, 3),
    (6, 4), (3, 4), (3, 5), (2, 5), (2, 3), (0, 3),
]
STAIR = [(0, 0), (6, 0), (6, 6), (4, 6), (4, 4), (2, 4), (2, 2), (0, 2)]

SHAPES = {
    "ear": EAR,
    "staircase": STAIR,
}
GENERATED = [(f"seed{seed:03d}", seed, 4 + 2 * ((seed - 1) % 19))
             for seed in (14, 90, 198, 416)]


def main() -> None:
    out = pathlib.Path(__file__).parent / "gallery"
    out.mkdir(exist_ok=True)
    polys = [(name, sc.validate_polygon(v)) for name, v in SHAPES.items()]
    polys += [(name, sc.generate_polygon(seed, n)) for name, seed, n in GENERATED]
    for name, P in polys:
        run = sc.run_pipeline(P)
        path = out / f"{name}.svg"
        path.write_text(sc.render_run(run))
        cameras, _ = sc.merged_cameras(run)
        print(f"{path}  {P.n} vertices, {len(cameras)} cameras, "
              f"{len(run.regions)} leftover regions")


if __name__ == "__main__":
    main()
