"""Brute-force optima: frozen values on the hand-checked shapes and
feasibility of every witness they return."""

import pytest

import slidecam as sc
from conftest import EAR, LSHAPE, PLUS, RECT, STAIR2, comb_polygon

H = sc.OrthoSegment.horizontal
V = sc.OrthoSegment.vertical


def test_opt_cameras_named():
    cases = [
        (RECT, 1, ["V 0 0 3"]),
        (LSHAPE, 1, ["H 2 0 4"]),
        (PLUS, 1, ["H 1 0 3"]),
        (STAIR2, 1, ["H 2 0 6"]),
        (EAR, 2, ["H 2 0 5", "H 3 0 6"]),
    ]
    for verts, want, witness in cases:
        P = sc.validate_polygon(verts)
        val, w = sc.opt_cameras(P)
        assert val == want
        assert [str(s) for s in w] == witness
        assert sc.covers_polygon(P, w)


def test_opt_guarded_cameras_named():
    cases = [
        (RECT, 2, ["V 0 0 3", "V 0 0 3"]),
        (LSHAPE, 2, ["H 2 0 4", "H 2 0 4"]),
        (PLUS, 2, ["H 1 0 3", "H 1 0 3"]),
        (STAIR2, 2, ["H 2 0 6", "H 2 0 6"]),
        (EAR, 2, ["H 2 0 5", "V 3 0 5"]),
    ]
    for verts, want, witness in cases:
        P = sc.validate_polygon(verts)
        val, w = sc.opt_guarded_cameras(P)
        assert val == want
        assert [str(s) for s in w] == witness
        assert sc.covers_polygon(P, w)
        for i, c in enumerate(w):
            others = list(w[:i]) + list(w[i + 1 :])
            assert any(sc.camera_guards_camera(P, o, c) for o in others)


def test_opt_grid_cover_small_graphs():
    assert sc.opt_grid_cover(sc.IntersectionGraph(0, ())) == (0, ())
    assert sc.opt_grid_cover(sc.IntersectionGraph(2, ((0, 1),))) == (2, (0, 1))
    path4 = sc.IntersectionGraph(4, ((0, 1), (1, 2), (2, 3)))
    assert sc.opt_grid_cover(path4) == (2, (1, 2))
    lonely = sc.IntersectionGraph(3, ((1, 2),))
    assert sc.opt_grid_cover(lonely) == (3, (0, 1, 2))


def test_opt_grid_cover_matches_solver_on_ear():
    P = sc.validate_polygon(EAR)
    run = sc.run_pipeline(P)
    val, witness = sc.opt_grid_cover(run.graph)
    assert val == len(run.chosen) == 2
    assert witness == run.chosen == (0, 2)


def test_opt_region_cover_on_ear():
    P = sc.validate_polygon(EAR)
    run = sc.run_pipeline(P)
    val, w = sc.opt_region_cover(P, run.regions)
    assert val == 1
    assert [str(s) for s in w] == ["H 3 0 6"]
    assert sc.opt_region_cover(P, []) == (0, ())


def test_opt_region_cover_allows_collective_cover():
    # one track covers the left half of the strip, another the right;
    # neither sees it whole, together they do
    P = sc.validate_polygon(LSHAPE)
    target = sc.from_rects([(0, 4, 0, 1)])
    val, w = sc.opt_region_cover(P, [target])
    assert val == 1  # H 2 0 4 alone already sees the strip
    val2, w2 = sc.opt_region_cover(P, [sc.from_rects([(0, 2, 2, 4)])])
    assert val2 == 1


def test_caps_raise_too_large():
    P = comb_polygon(22)
    with pytest.raises(sc.TooLarge):
        sc.opt_cameras(P)
    with pytest.raises(sc.TooLarge):
        sc.opt_guarded_cameras(P)
    with pytest.raises(sc.TooLarge):
        sc.opt_grid_cover(sc.IntersectionGraph(19, ()))
    val, _ = sc.opt_cameras(P, cap=30)
    assert val == 1


def test_witnesses_are_lexicographically_first():
    # ties between optimal witnesses resolve to the smallest tuple
    P = sc.validate_polygon(LSHAPE)
    _val, w = sc.opt_cameras(P)
    assert [str(s) for s in w] == ["H 2 0 4"]  # H sorts before V 2 0 4
