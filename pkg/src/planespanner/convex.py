"""Degree-3 plane spanners for point sets in convex position.

The construction keeps the convex hull and adds a matching between the two
hull chains that remain after cutting out a diametral pair.  The matching
is built greedily: join the closest inter-chain pair, then recurse
independently on the two sides of the line through it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InvalidInput, NotConvex, NotSeparated
from .geometry import as_points, convex_hull, diametral_pair, orientation
from .graph import GeometricGraph

__all__ = [
    "matching",
    "build_convex_spanner",
    "chain_stretch",
    "check_double_chain",
]


def _sq(a, b) -> Fraction:
    dx = Fraction(a[0]) - Fraction(b[0])
    dy = Fraction(a[1]) - Fraction(b[1])
    return dx * dx + dy * dy


def check_double_chain(C1: Sequence[int], C2: Sequence[int], S: Sequence) -> None:
    """Raise unless ``C1 + C2`` is in convex position with each chain a contiguous hull arc.

    Two chains whose union is in convex position can be split by a line
    exactly when neither interleaves the other along the hull.
    """
    verts = list(C1) + list(C2)
    if len(set(verts)) != len(verts):
        raise InvalidInput("chains share a vertex")
    if len(verts) < 3:
        return
    sub = [S[v] for v in verts]
    hull = convex_hull(sub)
    if len(hull) != len(sub):
        raise NotConvex("chain vertices are not in convex position")
    if not C1 or not C2:
        return
    labels = [0 if h < len(C1) else 1 for h in hull]
    changes = sum(labels[k] != labels[k - 1] for k in range(len(labels)))
    if changes != 2:
        raise NotSeparated("chains interleave along the convex hull")


def _closest_between(A: list[int], B: list[int], S) -> tuple[int, int]:
    PA = np.asarray([S[a] for a in A], dtype=float)
    PB = np.asarray([S[b] for b in B], dtype=float)
    D = ((PA[:, None, :] - PB[None, :, :]) ** 2).sum(axis=2)
    lo = D.min()
    rows, cols = np.nonzero(D <= lo + 1e-12 * lo)
    best, pair = None, None
    for r, c in zip(rows, cols):
        a, b = A[r], B[c]
        v = _sq(S[a], S[b])
        if best is None or v < best or (v == best and (a, b) < pair):
            best, pair = v, (a, b)
    return pair


def matching(
    C1: Sequence[int], C2: Sequence[int], S: Sequence, check: bool = True
) -> list[tuple[int, int]]:
    """Greedy closest-pair matching between two separated convex chains.

    Returns pairs ``(a, b)`` with ``a`` from ``C1`` and ``b`` from ``C2``, in
    the order they were selected.  Ties among closest pairs go to the
    smallest ``(a, b)`` by point index.
    """
    if check:
        check_double_chain(C1, C2, S)
    out: list[tuple[int, int]] = []
    stack = [(list(C1), list(C2))]
    while stack:
        A, B = stack.pop()
        if not A or not B:
            continue
        a, b = _closest_between(A, B, S)
        pa, pb = S[a], S[b]
        left = ([v for v in A if v != a and orientation(pa, pb, S[v]) > 0],
                [v for v in B if v != b and orientation(pa, pb, S[v]) > 0])
        right = ([v for v in A if v != a and orientation(pa, pb, S[v]) < 0],
                 [v for v in B if v != b and orientation(pa, pb, S[v]) < 0])
        out.append((a, b))
        # right pushed first so the left side is expanded first
        stack.append(right)
        stack.append(left)
    return out


def build_convex_spanner(S: Sequence) -> tuple[GeometricGraph, tuple[int, int] | None]:
    """Plane spanner of maximum degree 3 for a point set in convex position.

    Returns the graph together with the diametral pair that was cut out of
    the hull.  One or two points give the trivial graph.
    """
    pts = as_points(S)
    n = len(pts)
    if n == 0:
        raise InvalidInput("empty point set")
    if n == 1:
        return GeometricGraph(pts, ()), None
    if n == 2:
        return GeometricGraph(pts, ((0, 1),)), (0, 1)

    hull = convex_hull(pts)
    if len(hull) != n:
        raise NotConvex(f"{n - len(hull)} point(s) are not strict hull vertices")
    p, q = diametral_pair(pts)
    ip, iq = hull.index(p), hull.index(q)
    rolled = hull[ip:] + hull[:ip]
    k = (iq - ip) % n
    C1 = rolled[1:k]
    C2 = rolled[k + 1:]

    edges = {(min(u, v), max(u, v)) for u, v in zip(hull, hull[1:] + hull[:1])}
    for a, b in matching(C1, C2, pts, check=False):
        edges.add((min(a, b), max(a, b)))
    return GeometricGraph(pts, tuple(sorted(edges))), (p, q)


def chain_stretch(C: Sequence[int], S: Sequence) -> tuple[float, tuple[int, int]]:
    """Largest ratio of along-chain distance to Euclidean distance over vertex pairs."""
    if len(C) < 2:
        raise InvalidInput("chain needs at least two vertices")
    P = np.asarray([S[v] for v in C], dtype=float)
    seg = np.hypot(*np.diff(P, axis=0).T)
    cum = np.concatenate([[0.0], np.cumsum(seg)])
    iu, ju = np.triu_indices(len(C), k=1)
    euclid = np.hypot(P[ju, 0] - P[iu, 0], P[ju, 1] - P[iu, 1])
    ratios = (cum[ju] - cum[iu]) / euclid
    t = int(np.argmax(ratios))
    return float(ratios[t]), (C[iu[t]], C[ju[t]])
