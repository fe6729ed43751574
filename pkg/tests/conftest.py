"""Shared fixtures: a handful of hand-checked polygons plus the generated
corpus the acceptance suite sweeps.

The named shapes are small enough that every expectation in the tests was
derived on paper: chord lists, pruned grids, covers, leftovers, optima.
EAR is the one shape here whose smallest grid cover leaves part of the
polygon dark (the 2x1 ear on the upper right), which is what the patching
stage exists for.
"""

import pytest

import slidecam as sc

RECT = [(0, 0), (4, 0), (4, 3), (0, 3)]

LSHAPE = [(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]

PLUS = [
    (1, 0), (2, 0), (2, 1), (3, 1), (3, 2), (2, 2),
    (2, 3), (1, 3), (1, 2), (0, 2), (0, 1), (1, 1),
]

STAIR2 = [(0, 0), (6, 0), (6, 6), (4, 6), (4, 4), (2, 4), (2, 2), (0, 2)]

EAR = [
    (0, 1), (1, 1), (1, 2), (3, 2), (3, 0), (4, 0),
    (4, 1), (5, 1), (5, 2), (4, 2), (4, 3), (6, 3),
    (6, 4), (3, 4), (3, 5), (2, 5), (2, 3), (0, 3),
]

NAMED = {
    "rect": RECT,
    "lshape": LSHAPE,
    "plus": PLUS,
    "stair2": STAIR2,
    "ear": EAR,
}

CORPUS_SIZE = 500


def corpus_target(seed: int) -> int:
    # vertex counts cycle over 4, 6, ..., 40
    return 4 + 2 * ((seed - 1) % 19)


def comb_polygon(teeth: int):
    """Base strip with `teeth` upward prongs; 4*teeth + 2 vertices."""
    verts = [(0, 0), (2 * teeth, 0), (2 * teeth, 1)]
    for i in range(teeth - 1, 0, -1):
        verts += [(2 * i + 1, 1), (2 * i + 1, 3), (2 * i, 3), (2 * i, 1)]
    verts += [(1, 1), (1, 3), (0, 3)]
    return sc.validate_polygon(verts)


@pytest.fixture
def rect():
    return sc.validate_polygon(RECT)


@pytest.fixture
def lshape():
    return sc.validate_polygon(LSHAPE)


@pytest.fixture
def plus():
    return sc.validate_polygon(PLUS)


@pytest.fixture
def stair2():
    return sc.validate_polygon(STAIR2)


@pytest.fixture
def ear():
    return sc.validate_polygon(EAR)


@pytest.fixture(scope="session")
def corpus():
    return [
        (seed, sc.generate_polygon(seed, corpus_target(seed)))
        for seed in range(1, CORPUS_SIZE + 1)
    ]


@pytest.fixture(scope="session")
def corpus_runs(corpus):
    return [(seed, P, sc.run_pipeline(P)) for seed, P in corpus]
