"""How close the solver lands to optimal across generated polygons.

Sweeps the first 200 corpus seeds, compares against the brute-force optima,
and prints a ratio histogram for the plain and the guarded solver. The
guaranteed bounds are 3.5 and 2.5; in practice almost everything sits at
2.0 or below.

    python3 demos/ratio_sweep.py
"""

from collections import Counter
from fractions import Fraction

import slidecam as sc

SEEDS = range(1, 201)


def target(seed: int) -> int:
    return 4 + 2 * ((seed - 1) % 19)


def histogram(title: str, ratios) -> None:
    counts = Counter(ratios)
    total = sum(counts.values())
    print(f"\n{title} ({total} instances, worst {float(max(counts)):.2f}):")
    for ratio in sorted(counts):
        bar = "#" * round(60 * counts[ratio] / total)
        print(f"  {float(ratio):4.2f}  {counts[ratio]:4d}  {bar}")


def main() -> None:
    plain = []
    guarded = []
    for seed in SEEDS:
        P = sc.generate_polygon(seed, target(seed))
        got = sc.camera_cover(P)
        plain.append(Fraction(len(got.cameras), sc.opt_cameras(P)[0]))
        got = sc.guarded_camera_cover(P)
        guarded.append(Fraction(len(got.cameras), sc.opt_guarded_cameras(P)[0]))
    histogram("cover size / optimum (bound 3.50)", plain)
    histogram("guarded size / optimum (bound 2.50)", guarded)


if __name__ == "__main__":
    main()
