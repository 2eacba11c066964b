"""Planar primitives with exact sign decisions.

Coordinates are plain doubles.  Every predicate that feeds a combinatorial
decision (orientation, containment, crossing) is decided exactly: a cheap
floating-point evaluation is trusted only when its magnitude clears a
forward error bound, otherwise the expression is re-evaluated over
:class:`fractions.Fraction`, which is exact for any finite double.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import InvalidInput

__all__ = [
    "Point",
    "Segment",
    "Lune",
    "Disk",
    "as_points",
    "orientation",
    "orientation_filter",
    "convex_hull",
    "is_convex_position",
    "diametral_pair",
    "closest_pair",
    "lune_contains",
    "disk_contains",
    "segments_properly_intersect",
    "is_centrally_symmetric",
    "dist",
    "angle",
]

# Relative bound on the rounding error of the 2x2 determinant; a bit looser
# than Shewchuk's ccwerrboundA so the filter never has to be argued tightly.
_ORIENT_REL_ERR = 1e-15


class Point(NamedTuple):
    x: float
    y: float


class Segment(NamedTuple):
    a: Point
    b: Point


class Lune(NamedTuple):
    p: Point
    q: Point


class Disk(NamedTuple):
    """Closed disk with ``pq`` as a diameter."""

    p: Point
    q: Point


def as_points(coords: Iterable[Sequence[float]]) -> tuple[Point, ...]:
    """Validate raw coordinates into an immutable point tuple.

    Rejects non-finite coordinates and exactly coincident points.
    """
    pts = []
    for c in coords:
        if len(c) != 2:
            raise InvalidInput(f"point must have two coordinates, got {c!r}")
        x, y = float(c[0]), float(c[1])
        if not (math.isfinite(x) and math.isfinite(y)):
            raise InvalidInput(f"non-finite coordinate in {c!r}")
        pts.append(Point(x, y))
    seen: dict[Point, int] = {}
    for i, p in enumerate(pts):
        if p in seen:
            raise InvalidInput(f"points {seen[p]} and {i} coincide at {tuple(p)}")
        seen[p] = i
    return tuple(pts)


def dist(a: Sequence[float], b: Sequence[float]) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def angle(a: Sequence[float], b: Sequence[float], c: Sequence[float]) -> float:
    """Interior angle at ``b`` of the triangle ``abc``, in radians."""
    ux, uy = a[0] - b[0], a[1] - b[1]
    vx, vy = c[0] - b[0], c[1] - b[1]
    return abs(math.atan2(ux * vy - uy * vx, ux * vx + uy * vy))


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _orientation_exact(a, b, c) -> int:
    ax, ay = Fraction(a[0]), Fraction(a[1])
    det = (Fraction(b[0]) - ax) * (Fraction(c[1]) - ay) - (Fraction(b[1]) - ay) * (
        Fraction(c[0]) - ax
    )
    return _sign(det)


def orientation(a: Sequence[float], b: Sequence[float], c: Sequence[float]) -> int:
    """Sign of ``(b - a) x (c - a)``: +1 counterclockwise, -1 clockwise, 0 collinear."""
    l = (b[0] - a[0]) * (c[1] - a[1])
    r = (b[1] - a[1]) * (c[0] - a[0])
    det = l - r
    if abs(det) > _ORIENT_REL_ERR * (abs(l) + abs(r)):
        return 1 if det > 0 else -1
    return _orientation_exact(a, b, c)


def orientation_filter(ax, ay, bx, by, cx, cy) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised orientation with a certainty mask.

    Returns ``(sign, certain)``; entries where ``certain`` is False must be
    re-decided with :func:`orientation`.
    """
    l = (bx - ax) * (cy - ay)
    r = (by - ay) * (cx - ax)
    det = l - r
    certain = np.abs(det) > _ORIENT_REL_ERR * (np.abs(l) + np.abs(r))
    return np.sign(det).astype(np.int8), certain


def convex_hull(points: Sequence[Sequence[float]]) -> list[int]:
    """Indices of the strict convex hull vertices in counterclockwise order.

    Points lying in the relative interior of a hull edge are dropped.  The
    walk starts at the lexicographically smallest point.
    """
    n = len(points)
    if n == 0:
        return []
    order = sorted(range(n), key=lambda i: (points[i][0], points[i][1]))
    if n == 1:
        return order
    if points[order[0]] == points[order[-1]]:
        return [order[0]]

    def half(seq):
        chain: list[int] = []
        for i in seq:
            while len(chain) >= 2 and orientation(points[chain[-2]], points[chain[-1]], points[i]) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = half(order)
    upper = half(reversed(order))
    hull = lower[:-1] + upper[:-1]
    return hull


def is_convex_position(points: Sequence[Sequence[float]]) -> bool:
    """True iff every point is a strict hull vertex (no interior, no edge-interior points)."""
    return len(convex_hull(points)) == len(points)


def _pairwise_sq(P: np.ndarray) -> np.ndarray:
    d = P[:, None, :] - P[None, :, :]
    return np.einsum("ijk,ijk->ij", d, d)


def _sq_exact(a, b) -> Fraction:
    dx = Fraction(a[0]) - Fraction(b[0])
    dy = Fraction(a[1]) - Fraction(b[1])
    return dx * dx + dy * dy


def _extreme_pair(points, largest: bool) -> tuple[int, int]:
    n = len(points)
    if n < 2:
        raise InvalidInput("need at least two points")
    P = np.asarray(points, dtype=float)
    D = _pairwise_sq(P)
    iu, ju = np.triu_indices(n, k=1)
    vals = D[iu, ju]
    target = vals.max() if largest else vals.min()
    # Rounding in the float squares is ~1e-16 relative; widen the net and
    # settle the candidates exactly.
    slack = 1e-12 * max(abs(target), np.finfo(float).tiny)
    if largest:
        cand = np.nonzero(vals >= target - slack)[0]
    else:
        cand = np.nonzero(vals <= target + slack)[0]
    best = None
    best_pair = None
    for c in cand:  # row-major order from triu_indices is lexicographic
        i, j = int(iu[c]), int(ju[c])
        v = _sq_exact(points[i], points[j])
        if best is None or (v > best if largest else v < best):
            best, best_pair = v, (i, j)
    return best_pair


def diametral_pair(points: Sequence[Sequence[float]]) -> tuple[int, int]:
    """A farthest pair ``(i, j)``, ``i < j``; lexicographically smallest among exact ties."""
    return _extreme_pair(points, largest=True)


def closest_pair(points: Sequence[Sequence[float]]) -> tuple[int, int, float]:
    """Closest pair ``(i, j, distance)`` with lexicographic tie-breaking."""
    i, j = _extreme_pair(points, largest=False)
    return i, j, dist(points[i], points[j])


def lune_contains(lune: Lune, c: Sequence[float]) -> bool:
    """Closed lune membership: ``|cp| <= |pq|`` and ``|cq| <= |pq|``, exact."""
    p, q = lune
    pq = _sq_exact(p, q)
    return _sq_exact(c, p) <= pq and _sq_exact(c, q) <= pq


def disk_contains(disk: Disk, c: Sequence[float]) -> bool:
    """Closed membership in the disk with diameter ``pq``.

    Uses the equivalent test ``(c - p) . (c - q) <= 0`` (Thales), exact.
    """
    p, q = disk
    cx, cy = Fraction(c[0]), Fraction(c[1])
    dot = (cx - Fraction(p[0])) * (cx - Fraction(q[0])) + (cy - Fraction(p[1])) * (
        cy - Fraction(q[1])
    )
    return dot <= 0


def _on_closed_segment(a, b, c) -> bool:
    """``c`` collinear with ``ab`` assumed; exact bounding-box test."""
    return min(a[0], b[0]) <= c[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= c[1] <= max(a[1], b[1])


def _same_ray(p, a, b) -> bool:
    """For collinear ``p, a, b``: do ``a`` and ``b`` lie on the same side of ``p``?"""
    sx = _sign(a[0] - p[0]) * _sign(b[0] - p[0])
    sy = _sign(a[1] - p[1]) * _sign(b[1] - p[1])
    return sx > 0 or sy > 0


def segments_properly_intersect(s1: Sequence, s2: Sequence) -> bool:
    """True iff the closed segments meet anywhere other than one shared endpoint.

    Crossings, collinear overlaps and an endpoint touching the other
    segment's interior all count.
    """
    a, b = tuple(s1[0]), tuple(s1[1])
    c, d = tuple(s2[0]), tuple(s2[1])
    shared = {a, b} & {c, d}
    if len(shared) == 2:
        return True
    if len(shared) == 1:
        (p,) = shared
        u = b if a == p else a
        v = d if c == p else c
        return orientation(p, u, v) == 0 and _same_ray(p, u, v)

    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and _on_closed_segment(a, b, c):
        return True
    if o2 == 0 and _on_closed_segment(a, b, d):
        return True
    if o3 == 0 and _on_closed_segment(c, d, a):
        return True
    if o4 == 0 and _on_closed_segment(c, d, b):
        return True
    return False


def is_centrally_symmetric(points: Sequence[Sequence[float]], tol: float | None = None) -> bool:
    """Does the set equal its own point reflection through the centroid (within ``tol``)?

    ``tol`` defaults to ``1e-9`` times the diameter.
    """
    n = len(points)
    if n == 0:
        return True
    P = np.asarray(points, dtype=float)
    P = P - P.mean(axis=0)
    if tol is None:
        if n == 1:
            tol = 0.0
        else:
            i, j = diametral_pair(points)
            tol = 1e-9 * dist(points[i], points[j])
    # distance from each reflected point to its nearest partner
    D = _pairwise_sq(np.vstack([P, -P]))[:n, n:]
    return bool(np.all(np.sqrt(D.min(axis=0)) <= tol))
