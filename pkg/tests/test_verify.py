import math

import numpy as np
import pytest

from planespanner.graph import GeometricGraph
from planespanner.convex import build_convex_spanner
from planespanner.grid import build_grid_spanner
from planespanner.verify import (
    bounded_faces,
    max_degree,
    shortest_path,
    stretch_factor,
    verify,
    verify_planarity,
)

from conftest import convex_polygon, floyd_warshall_stretch, random_grid

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
CYCLE = [(0, 1), (1, 2), (2, 3), (0, 3)]


def random_graph(rng, n_max=12, p=None):
    n = int(rng.integers(2, n_max + 1))
    P = [tuple(v) for v in rng.random((n, 2))]
    p = rng.uniform(0.2, 0.9) if p is None else p
    E = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return GeometricGraph.build(P, E)


def test_square_cycle_is_plane():
    assert verify_planarity(GeometricGraph.build(SQUARE, CYCLE)) == (True, None)


def test_diagonals_cross_with_witness():
    G = GeometricGraph.build(SQUARE, CYCLE + [(0, 2), (1, 3)])
    ok, witness = verify_planarity(G)
    assert not ok
    assert set(witness) == {(0, 2), (1, 3)}


def test_collinear_overlap_detected():
    G = GeometricGraph.build([(0, 0), (1, 0), (2, 0), (3, 0)], [(0, 2), (1, 3)])
    assert not verify_planarity(G)[0]


def test_path_through_collinear_vertices_is_plane():
    G = GeometricGraph.build([(0, 0), (1, 0), (2, 0)], [(0, 1), (1, 2)])
    assert verify_planarity(G)[0]


def test_planarity_matches_pairwise_scan(rng):
    from planespanner.geometry import segments_properly_intersect

    for _ in range(40):
        G = random_graph(rng, n_max=10, p=0.3)
        expected = True
        for x in range(len(G.edges)):
            for y in range(x + 1, len(G.edges)):
                s1 = tuple(G.points[v] for v in G.edges[x])
                s2 = tuple(G.points[v] for v in G.edges[y])
                if segments_properly_intersect(s1, s2):
                    expected = False
        assert verify_planarity(G)[0] is expected


def test_convex_spanners_are_plane(rng):
    for n in (5, 17, 64):
        G, _ = build_convex_spanner(convex_polygon(rng, n))
        assert verify_planarity(G)[0]


def test_stretch_examples():
    G = GeometricGraph.build([(0, 0), (1, 0), (2, 0)], [(0, 1), (1, 2)])
    assert stretch_factor(G) == (1.0, (0, 1))
    t, w = stretch_factor(GeometricGraph.build(SQUARE, CYCLE))
    assert t == pytest.approx(math.sqrt(2), abs=1e-15)
    assert w in {(0, 2), (1, 3)}


def test_stretch_disconnected_and_trivial():
    G = GeometricGraph.build(SQUARE, [(0, 1)])
    t, w = stretch_factor(G)
    assert t == math.inf and w is not None
    assert stretch_factor(GeometricGraph.build([(0, 0)], [])) == (1.0, None)
    assert not verify(G).connected


def test_stretch_matches_floyd_warshall(rng):
    for _ in range(100):
        G = random_graph(rng)
        t, _ = stretch_factor(G)
        ref = floyd_warshall_stretch(G.points, G.edges)
        if math.isinf(ref):
            assert math.isinf(t)
        else:
            assert abs(t - ref) <= 1e-12


def test_restricted_stretch_matches_floyd_warshall(rng):
    for _ in range(30):
        G = random_graph(rng, p=0.6)
        subset = sorted(set(int(v) for v in rng.integers(0, G.n, 4)))
        t, _ = stretch_factor(G, subset)
        ref = floyd_warshall_stretch(G.points, G.edges, subset)
        assert t == pytest.approx(ref, abs=1e-12) or (math.isinf(t) and math.isinf(ref))


def test_adding_edge_never_increases_stretch(rng):
    for _ in range(30):
        G = random_graph(rng, p=0.5)
        t, _ = stretch_factor(G)
        missing = [(i, j) for i in range(G.n) for j in range(i + 1, G.n) if (i, j) not in set(G.edges)]
        if not missing:
            continue
        e = missing[int(rng.integers(len(missing)))]
        H = GeometricGraph.build(G.points, G.edges + (e,))
        assert stretch_factor(H)[0] <= t


def test_witness_ratio_equals_stretch(rng):
    for _ in range(20):
        G = random_graph(rng, p=0.7)
        t, (u, v) = stretch_factor(G)
        if math.isinf(t):
            continue
        route = shortest_path(G, u, v)
        length = sum(math.dist(G.points[a], G.points[b]) for a, b in zip(route, route[1:]))
        assert length / math.dist(G.points[u], G.points[v]) == pytest.approx(t, rel=1e-14)


def test_max_degree_examples(rng):
    assert max_degree(GeometricGraph.build(SQUARE, [])) == 0
    star = GeometricGraph.build([(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)], [(0, k) for k in range(1, 5)])
    assert max_degree(star) == 4
    from planespanner.grid import Grid

    g = Grid(tuple(np.cumsum(rng.uniform(1, 10, 10))), tuple(np.cumsum(rng.uniform(1, 10, 10))))
    assert max_degree(build_grid_spanner(g)) <= 3


def test_report_dict_shape():
    d = verify(GeometricGraph.build(SQUARE, CYCLE)).to_dict()
    assert set(d) == {"max_degree", "is_plane", "stretch", "witness", "connected"}
    bad = verify(GeometricGraph.build(SQUARE, CYCLE + [(0, 2), (1, 3)])).to_dict()
    assert bad["is_plane"] is False and "crossing" in bad
    assert verify(GeometricGraph.build(SQUARE, [(0, 1)])).to_dict()["stretch"] is None


def test_restrict_original_uses_mask():
    # a Steiner midpoint on the diagonal shortens nothing between originals
    pts = SQUARE + [(0.5, 0.5)]
    G = GeometricGraph.build(pts, CYCLE + [(0, 4)], steiner=[False] * 4 + [True])
    assert verify(G, restrict_original=True).stretch == pytest.approx(math.sqrt(2), abs=1e-15)


def test_bounded_faces_of_square_with_diagonal():
    G = GeometricGraph.build(SQUARE, CYCLE + [(0, 2)])
    faces = bounded_faces(G)
    assert sorted(len(f) for f in faces) == [3, 3]


def test_bounded_faces_euler(rng):
    for _ in range(5):
        grid = random_grid(rng, max_side=8)
        G = build_grid_spanner(grid)
        # connected plane graph: E - V + 1 bounded faces
        assert len(bounded_faces(G)) == len(G.edges) - G.n + 1
