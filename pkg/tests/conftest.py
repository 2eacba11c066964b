"""Independent oracles and corpus builders shared by the test modules.

Nothing here calls into the code paths it is used to check: hulls are
found by enumerating candidate edges, shortest paths by Floyd-Warshall,
extreme pairs by exact integer arithmetic.
"""

from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from planespanner.geometry import convex_hull


# ---------------------------------------------------------------- oracles

def brute_hull_vertices(points) -> set[int]:
    """Strict hull vertices: ``i`` is one unless it lies in a closed triangle or segment of others."""
    n = len(points)
    if n <= 2:
        return set(range(n))

    def orient(a, b, c):
        from fractions import Fraction as F

        v = (F(b[0]) - F(a[0])) * (F(c[1]) - F(a[1])) - (F(b[1]) - F(a[1])) * (F(c[0]) - F(a[0]))
        return (v > 0) - (v < 0)

    def on_segment(a, b, c):
        return (orient(a, b, c) == 0
                and min(a[0], b[0]) <= c[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= c[1] <= max(a[1], b[1]))

    out = set()
    for i in range(n):
        c = points[i]
        others = [points[j] for j in range(n) if j != i]
        covered = any(on_segment(a, b, c) for a, b in itertools.combinations(others, 2))
        if not covered:
            for a, b, d in itertools.combinations(others, 3):
                o1, o2, o3 = orient(a, b, c), orient(b, d, c), orient(d, a, c)
                if (o1 >= 0 and o2 >= 0 and o3 >= 0) or (o1 <= 0 and o2 <= 0 and o3 <= 0):
                    if orient(a, b, d) != 0:
                        covered = True
                        break
        if not covered:
            out.add(i)
    return out


def edge_hull_vertices(P: np.ndarray) -> set[int]:
    """O(n^3) hull for generic float points: ``(i, j)`` is a hull edge iff all others lie strictly left."""
    n = len(P)
    out = set()
    for i in range(n):
        d = P - P[i]
        cross = d[:, None, 0] * d[None, :, 1] - d[:, None, 1] * d[None, :, 0]  # cross[j, k]
        cross[:, i] = 1.0
        np.fill_diagonal(cross, 1.0)
        for j in np.nonzero(np.all(cross > 0, axis=1))[0]:
            if j != i:
                out.update((i, int(j)))
    return out


def floyd_warshall_stretch(points, edges, restrict=None):
    n = len(points)
    D = [[math.inf] * n for _ in range(n)]
    for i in range(n):
        D[i][i] = 0.0
    for i, j in edges:
        w = math.dist(points[i], points[j])
        D[i][j] = D[j][i] = min(D[i][j], w)
    for k in range(n):
        Dk = D[k]
        for i in range(n):
            dik = D[i][k]
            if dik == math.inf:
                continue
            Di = D[i]
            for j in range(n):
                if dik + Dk[j] < Di[j]:
                    Di[j] = dik + Dk[j]
    verts = range(n) if restrict is None else restrict
    best = 1.0
    for i, j in itertools.combinations(verts, 2):
        best = max(best, D[i][j] / math.dist(points[i], points[j]))
    return best


def int_extreme_pair(points, largest):
    """Exact lexicographic extreme pair for integer-valued coordinates."""
    best, pair = None, None
    for i, j in itertools.combinations(range(len(points)), 2):
        dx = int(points[i][0]) - int(points[j][0])
        dy = int(points[i][1]) - int(points[j][1])
        v = dx * dx + dy * dy
        if best is None or (v > best if largest else v < best):
            best, pair = v, (i, j)
    return pair, math.sqrt(best)


# ---------------------------------------------------------------- corpora

def convex_polygon(rng, n):
    from planespanner.generators import InstanceSpec, generate

    return [tuple(p) for p in generate(InstanceSpec("convex-random", n=n, seed=int(rng.integers(2**32))))]


def double_chain(rng, n):
    """Two contiguous arcs of a random convex polygon, each counterclockwise, with random gaps removed."""
    P = convex_polygon(rng, n)
    hull = convex_hull(P)
    cut = int(rng.integers(1, n))
    A, B = hull[:cut], hull[cut:]
    # dropping end vertices keeps each chain a contiguous arc
    if len(A) > 1 and rng.random() < 0.5:
        A = A[int(rng.integers(0, 2)):]
    if len(B) > 1 and rng.random() < 0.5:
        B = B[: len(B) - int(rng.integers(0, 2))]
    return P, A, B


def upper_chain(P, p, q):
    """Upper convex chain from ``p`` to ``q`` over the given extra points (all above ``pq``)."""
    pts = [p, q] + list(P)
    hull = convex_hull(pts)
    # p is lexicographically smallest and everything else is above pq
    assert hull[:2] == [0, 1]
    return pts, [0] + hull[2:][::-1] + [1]


def lune_chain(rng, count, boundary_share=0.5):
    p, q = (0.0, 0.0), (1.0, 0.0)
    pts = []
    for _ in range(count):
        if rng.random() < boundary_share:
            if rng.random() < 0.5:
                phi = rng.uniform(2 * math.pi / 3, math.pi)
                pts.append((1.0 + math.cos(phi), math.sin(phi)))
            else:
                phi = rng.uniform(0, math.pi / 3)
                pts.append((math.cos(phi), math.sin(phi)))
        else:
            while True:
                c = (rng.uniform(0, 1), rng.uniform(1e-6, math.sqrt(3) / 2))
                if math.dist(c, p) <= 1 and math.dist(c, q) <= 1:
                    pts.append(c)
                    break
    return upper_chain(pts, p, q)


def disk_chain(rng, count, boundary_share=0.5):
    p, q = (0.0, 0.0), (1.0, 0.0)
    pts = []
    for _ in range(count):
        if rng.random() < boundary_share:
            phi = rng.uniform(1e-6, math.pi - 1e-6)
            pts.append((0.5 + 0.5 * math.cos(phi), 0.5 * math.sin(phi)))
        else:
            r = 0.5 * math.sqrt(rng.random())
            phi = rng.uniform(1e-6, math.pi - 1e-6)
            pts.append((0.5 + r * math.cos(phi), r * math.sin(phi)))
    return upper_chain(pts, p, q)


def random_grid(rng, max_side=40, min_side=3):
    from planespanner.grid import Grid

    m, k = (int(v) for v in rng.integers(min_side, max_side + 1, 2))
    xs = np.cumsum(rng.uniform(1, 10, k))
    ys = np.cumsum(rng.uniform(1, 10, m))
    return Grid(tuple(xs), tuple(ys))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
