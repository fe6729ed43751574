"""Blossom matching and the edge-cover reduction against exhaustive search."""

import random

import pytest

import brute
import slidecam as sc


def check_matching(n, edges, got):
    used = set()
    es = set(map(tuple, edges))
    for a, b in got:
        assert (a, b) in es or (b, a) in es
        assert a not in used and b not in used
        used.update((a, b))


def test_matching_triangle():
    got = sc.max_cardinality_matching(3, [(0, 1), (1, 2), (0, 2)])
    assert len(got) == 1


def test_matching_path_four():
    got = sc.max_cardinality_matching(4, [(0, 1), (1, 2), (2, 3)])
    assert len(got) == 2


def test_matching_needs_blossom():
    # 5-cycle with a pendant: augmenting path passes through the odd cycle
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5)]
    got = sc.max_cardinality_matching(6, edges)
    assert len(got) == 3
    check_matching(6, edges, got)


def test_matching_two_triangles_bridge():
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
    got = sc.max_cardinality_matching(6, edges)
    assert len(got) == 3
    check_matching(6, edges, got)


def test_matching_random_vs_brute():
    rng = random.Random(23)
    for trial in range(150):
        n = rng.randint(0, 12)
        edges = brute.random_graph(rng, n, rng.uniform(0.1, 0.8))
        got = sc.max_cardinality_matching(n, edges)
        check_matching(n, edges, got)
        assert len(got) == brute.matching_size(n, edges), (trial, edges)


def check_cover(n, edges, loops, got):
    es = {tuple(sorted(e)) for e in edges} | {(v, v) for v in loops}
    touched = set()
    for a, b in got:
        assert tuple(sorted((a, b))) in es
        touched.update((a, b))
    assert touched == set(range(n))


def test_edge_cover_single_edge():
    got = sc.min_edge_cover(2, [(0, 1)])
    assert got == [(0, 1)]


def test_edge_cover_star():
    edges = [(0, i) for i in range(1, 5)]
    got = sc.min_edge_cover(5, edges)
    assert len(got) == 4
    check_cover(5, edges, (), got)


def test_edge_cover_with_loops():
    got = sc.min_edge_cover(3, [(0, 1)], loops=(2,))
    assert sorted(got) == [(0, 1), (2, 2)]


def test_edge_cover_uncoverable():
    with pytest.raises(sc.UncoverableVertex):
        sc.min_edge_cover(3, [(0, 1)])


def test_edge_cover_gallai_and_brute():
    rng = random.Random(31)
    for trial in range(150):
        n = rng.randint(1, 12)
        edges = brute.random_graph(rng, n, rng.uniform(0.15, 0.9))
        covered = {v for e in edges for v in e}
        loops = tuple(v for v in range(n) if v not in covered)
        got = sc.min_edge_cover(n, edges, loops=loops)
        check_cover(n, edges, loops, got)
        want = brute.edge_cover_size(n, edges, loops)
        assert len(got) == want, (trial, edges, loops)
        # Gallai on the loop-free part: cover size = nodes - matching size
        m = len(sc.max_cardinality_matching(n, edges))
        assert len(got) - len(loops) == len(covered) - m
