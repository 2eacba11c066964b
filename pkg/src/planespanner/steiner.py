"""Degree reduction to 3 with Steiner points.

Every original vertex ``p`` gets a small circle of radius
``epsilon * CP / (pi * n)``.  Each incident edge is cut where it meets the
circle, one extra point ``p'`` is placed on the circle, ``p`` keeps only
the spoke ``p p'``, and the points on each circle are joined by chords in
angular order.  Detours stay below ``pi * radius`` per traversed vertex, so
the stretch grows by at most ``epsilon``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegreeBoundViolated, InvalidInput, NotPlane, RadiusCollision
from .geometry import closest_pair, orientation
from .graph import GeometricGraph
from .verify import verify_planarity

__all__ = ["SteinerConfig", "augment_to_degree3", "augment", "count_bound"]

_COLLISION = 1e-12
_MAX_HALVINGS = 40


@dataclass(frozen=True)
class SteinerConfig:
    epsilon: float
    cp: float
    eps_prime: float
    radius: float
    halvings: int = 0


def count_bound(n: int, total_degree: int) -> int:
    """Steiner points used for ``n`` vertices of the given total degree."""
    if n < 3:
        raise InvalidInput("bound stated for n >= 3")
    if total_degree > 6 * n - 12:
        raise DegreeBoundViolated(f"total degree {total_degree} exceeds 6n-12 = {6 * n - 12}")
    count = total_degree + n
    assert count <= 7 * n - 12
    return count


def _point_segment_dist(p: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ab = b - a
    t = np.einsum("ij,ij->i", p - a, ab) / np.einsum("ij,ij->i", ab, ab)
    t = np.clip(t, 0.0, 1.0)
    proj = a + t[:, None] * ab
    return np.hypot(*(p - proj).T)


def _clearance(G: GeometricGraph) -> float:
    """Smallest distance from a vertex to an edge not incident to it."""
    if not G.edges:
        return math.inf
    P = G.coords()
    E = np.asarray(G.edges)
    best = math.inf
    for v in range(G.n):
        keep = (E[:, 0] != v) & (E[:, 1] != v)
        if not keep.any():
            continue
        e = E[keep]
        pv = np.broadcast_to(P[v], (len(e), 2))
        best = min(best, float(_point_segment_dist(pv, P[e[:, 0]], P[e[:, 1]]).min()))
    return best


def _circle_layout(G: GeometricGraph, r: float):
    """Crossing directions per vertex; ``None`` if two crossings on a circle nearly coincide."""
    P = G.coords()
    adj = G.adjacency()
    layout = []
    for v in range(G.n):
        dirs = []
        for w in adj[v]:
            dx, dy = P[w] - P[v]
            L = math.hypot(dx, dy)
            dirs.append((math.atan2(dy, dx), w, (P[v, 0] + r * dx / L, P[v, 1] + r * dy / L)))
        dirs.sort()
        for (t1, _, a), (t2, _, b) in zip(dirs, dirs[1:]):
            if math.hypot(a[0] - b[0], a[1] - b[1]) < _COLLISION:
                return None
        layout.append(dirs)
    return layout


def _extra_point_angle(thetas: list[float]) -> float:
    if not thetas:
        return 0.0
    if len(thetas) == 1:
        # a diametrically opposite p' would put the chord through p
        return thetas[0] + math.pi / 2
    gaps = [(thetas[(t + 1) % len(thetas)] - thetas[t]) % (2 * math.pi) for t in range(len(thetas))]
    t = max(range(len(gaps)), key=lambda s: (gaps[s], -s))
    return thetas[t] + gaps[t] / 2


def augment(G: GeometricGraph, epsilon: float) -> tuple[GeometricGraph, SteinerConfig]:
    """Degree-3 plane graph on ``G`` plus Steiner points, with the radius actually used."""
    if not epsilon > 0:
        raise InvalidInput("epsilon must be positive")
    if G.steiner is not None and any(G.steiner):
        raise InvalidInput("input graph already carries Steiner vertices")
    plane, witness = verify_planarity(G)
    if not plane:
        raise NotPlane(f"edges {witness[0]} and {witness[1]} cross")
    n = G.n
    if n == 0:
        raise InvalidInput("empty graph")
    cp = closest_pair(G.points)[2] if n >= 2 else 1.0
    eps_prime = epsilon * cp
    r = eps_prime / (math.pi * n)

    # circles must stay disjoint and away from non-incident edges
    limit = min(cp / 3.0, _clearance(G))
    halvings = 0
    while True:
        layout = _circle_layout(G, r) if r < limit else None
        if layout is not None:
            break
        halvings += 1
        if halvings > _MAX_HALVINGS:
            raise RadiusCollision("could not separate circle crossings by shrinking the radius")
        r /= 2.0

    P = G.coords()
    points = [tuple(p) for p in P]
    steiner = [False] * n
    edges = []
    crossing_id: dict[tuple[int, int], int] = {}

    for v in range(n):
        dirs = layout[v]
        ring = []
        for theta, w, xy in dirs:
            crossing_id[(v, w)] = len(points)
            ring.append((theta, len(points)))
            points.append(xy)
            steiner.append(True)
        phi = _extra_point_angle([d[0] for d in dirs])
        pv = len(points)
        points.append((P[v, 0] + r * math.cos(phi), P[v, 1] + r * math.sin(phi)))
        steiner.append(True)
        edges.append((v, pv))
        ring.append((phi, pv))
        ring.sort(key=lambda t: t[0] % (2 * math.pi))
        ids = [i for _, i in ring]
        if len(ids) == 2:
            edges.append((ids[0], ids[1]))
        elif len(ids) >= 3:
            for a, b in zip(ids, ids[1:] + ids[:1]):
                # a chord spanning half the circle or more would pass through or behind p
                if orientation(points[a], points[b], points[v]) > 0:
                    edges.append((a, b))

    for u, w in G.edges:
        edges.append((crossing_id[(u, w)], crossing_id[(w, u)]))

    out = GeometricGraph.build(points, edges, steiner)
    return out, SteinerConfig(epsilon, cp, eps_prime, r, halvings)


def augment_to_degree3(G: GeometricGraph, epsilon: float) -> GeometricGraph:
    """Plane graph of maximum degree 3 whose stretch over original pairs is at most ``t + epsilon``.

    Original vertices keep their indices ``0..n-1`` and end up with degree 1;
    the Steiner vertices follow, flagged in ``steiner``.
    """
    return augment(G, epsilon)[0]
