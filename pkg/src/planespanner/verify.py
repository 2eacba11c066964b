"""Brute-force certificates for plane, degree and stretch claims."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from .geometry import orientation_filter, segments_properly_intersect
from .graph import GeometricGraph

__all__ = [
    "SpannerReport",
    "verify_planarity",
    "stretch_factor",
    "max_degree",
    "shortest_path_lengths",
    "shortest_path",
    "bounded_faces",
    "verify",
]


@dataclass
class SpannerReport:
    max_degree: int
    is_plane: bool
    stretch: float
    witness: tuple[int, int] | None
    connected: bool
    crossing: tuple[tuple[int, int], tuple[int, int]] | None = field(default=None)

    def to_dict(self) -> dict:
        d = {
            "max_degree": int(self.max_degree),
            "is_plane": bool(self.is_plane),
            "stretch": float(self.stretch) if math.isfinite(self.stretch) else None,
            "witness": list(self.witness) if self.witness is not None else None,
            "connected": bool(self.connected),
        }
        if self.crossing is not None:
            d["crossing"] = [list(e) for e in self.crossing]
        return d


def max_degree(G: GeometricGraph) -> int:
    if G.n == 0:
        return 0
    return int(G.degrees().max())


def _candidate_pairs(P: np.ndarray, E: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Edge pairs whose bounding boxes overlap (closed), ``i < j`` in edge order."""
    a, b = P[E[:, 0]], P[E[:, 1]]
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    order = np.argsort(lo[:, 0], kind="stable")
    slo, shi = lo[order], hi[order]
    firsts, seconds = [], []
    for k in range(len(order)):
        end = np.searchsorted(slo[:, 0], shi[k, 0], side="right")
        if end <= k + 1:
            continue
        rest = np.arange(k + 1, end)
        keep = (slo[rest, 1] <= shi[k, 1]) & (shi[rest, 1] >= slo[k, 1])
        rest = rest[keep]
        firsts.append(np.full(len(rest), order[k]))
        seconds.append(order[rest])
    if not firsts:
        empty = np.zeros(0, dtype=int)
        return empty, empty
    i = np.concatenate(firsts)
    j = np.concatenate(seconds)
    return np.minimum(i, j), np.maximum(i, j)


def verify_planarity(G: GeometricGraph) -> tuple[bool, tuple[tuple[int, int], tuple[int, int]] | None]:
    """Exact pairwise crossing check.

    Returns ``(True, None)`` or ``(False, (edge_a, edge_b))`` where the
    witness is the lexicographically first offending pair of edges (by
    position in ``G.edges``).
    """
    if len(G.edges) < 2:
        return True, None
    P = G.coords()
    E = np.asarray(G.edges)
    ei, ej = _candidate_pairs(P, E)
    if len(ei) == 0:
        return True, None

    u1, v1 = E[ei, 0], E[ei, 1]
    u2, v2 = E[ej, 0], E[ej, 1]
    shares = (u1 == u2) | (u1 == v2) | (v1 == u2) | (v1 == v2)

    undecided = np.zeros(len(ei), dtype=bool)
    bad = np.zeros(len(ei), dtype=bool)

    # disjoint-index pairs: four orientations
    m = ~shares
    a, b, c, d = P[u1[m]], P[v1[m]], P[u2[m]], P[v2[m]]
    o1, k1 = orientation_filter(*a.T, *b.T, *c.T)
    o2, k2 = orientation_filter(*a.T, *b.T, *d.T)
    o3, k3 = orientation_filter(*c.T, *d.T, *a.T)
    o4, k4 = orientation_filter(*c.T, *d.T, *b.T)
    certain = k1 & k2 & k3 & k4
    idx = np.nonzero(m)[0]
    bad[idx[certain]] = ((o1 * o2 < 0) & (o3 * o4 < 0))[certain]
    undecided[idx[~certain]] = True

    # pairs sharing a vertex can only overlap if collinear
    idx = np.nonzero(shares)[0]
    if len(idx):
        s1u, s1v, s2u, s2v = u1[idx], v1[idx], u2[idx], v2[idx]
        pivot = np.where((s1u == s2u) | (s1u == s2v), s1u, s1v)
        other1 = np.where(pivot == s1u, s1v, s1u)
        other2 = np.where(pivot == s2u, s2v, s2u)
        o, k = orientation_filter(*P[pivot].T, *P[other1].T, *P[other2].T)
        undecided[idx[~(k & (o != 0))]] = True

    for t in np.nonzero(undecided)[0]:
        e1, e2 = G.edges[ei[t]], G.edges[ej[t]]
        s1 = (G.points[e1[0]], G.points[e1[1]])
        s2 = (G.points[e2[0]], G.points[e2[1]])
        if segments_properly_intersect(s1, s2):
            bad[t] = True

    hits = np.nonzero(bad)[0]
    if len(hits) == 0:
        return True, None
    t = min(hits, key=lambda h: (ei[h], ej[h]))
    return False, (G.edges[ei[t]], G.edges[ej[t]])


def _csgraph(G: GeometricGraph) -> csr_matrix:
    n = G.n
    if not G.edges:
        return csr_matrix((n, n))
    E = np.asarray(G.edges)
    w = G.edge_lengths()
    rows = np.concatenate([E[:, 0], E[:, 1]])
    cols = np.concatenate([E[:, 1], E[:, 0]])
    return csr_matrix((np.concatenate([w, w]), (rows, cols)), shape=(n, n))


def shortest_path_lengths(G: GeometricGraph, sources: Sequence[int] | None = None) -> np.ndarray:
    """Shortest-path lengths from ``sources`` (rows) to every vertex (columns)."""
    if sources is None:
        sources = range(G.n)
    src = np.asarray(list(sources), dtype=int)
    if len(src) == 0 or G.n == 0:
        return np.zeros((len(src), G.n))
    return dijkstra(_csgraph(G), directed=False, indices=src)


def stretch_factor(
    G: GeometricGraph, restrict_to: Sequence[int] | None = None
) -> tuple[float, tuple[int, int] | None]:
    """Maximum of graph distance over Euclidean distance across vertex pairs.

    ``restrict_to`` limits the pairs (and the Dijkstra sources) to a vertex
    subset; Steiner vertices may still carry paths.  Returns
    ``(inf, pair)`` for a disconnected pair and ``(1.0, None)`` when fewer
    than two vertices are in play.
    """
    verts = list(range(G.n)) if restrict_to is None else sorted(set(int(v) for v in restrict_to))
    if len(verts) < 2:
        return 1.0, None
    D = shortest_path_lengths(G, verts)[:, verts]
    P = G.coords()[verts]
    euclid = np.hypot(P[:, None, 0] - P[None, :, 0], P[:, None, 1] - P[None, :, 1])
    iu, ju = np.triu_indices(len(verts), k=1)
    gd = D[iu, ju]
    if not np.all(np.isfinite(gd)):
        t = int(np.argmax(~np.isfinite(gd)))
        return math.inf, (verts[iu[t]], verts[ju[t]])
    ratios = gd / euclid[iu, ju]
    t = int(np.argmax(ratios))
    return float(ratios[t]), (verts[iu[t]], verts[ju[t]])


def bounded_faces(G: GeometricGraph) -> list[list[int]]:
    """Bounded faces of a connected plane graph as counterclockwise vertex cycles.

    Walks half-edges, always leaving a vertex along the edge that is next
    clockwise from the one just arrived on, so the face stays on the left.
    Faces with positive signed area are bounded.
    """
    P = G.coords()
    adj = G.adjacency()
    ccw = []
    for v, nbrs in enumerate(adj):
        ccw.append(sorted(nbrs, key=lambda w: math.atan2(P[w, 1] - P[v, 1], P[w, 0] - P[v, 0])))
    pos = [{w: k for k, w in enumerate(lst)} for lst in ccw]
    seen = set()
    faces = []
    for u, v in G.edges:
        for start in ((u, v), (v, u)):
            if start in seen:
                continue
            cycle = []
            a, b = start
            while (a, b) not in seen:
                seen.add((a, b))
                cycle.append(a)
                lst = ccw[b]
                w = lst[(pos[b][a] - 1) % len(lst)]
                a, b = b, w
            xs, ys = P[cycle, 0], P[cycle, 1]
            area = 0.5 * float(np.dot(xs, np.roll(ys, -1)) - np.dot(ys, np.roll(xs, -1)))
            if area > 0:
                faces.append(cycle)
    return faces


def verify(G: GeometricGraph, restrict_original: bool = False) -> SpannerReport:
    plane, crossing = verify_planarity(G)
    restrict = G.original_indices() if restrict_original else None
    t, witness = stretch_factor(G, restrict)
    return SpannerReport(
        max_degree=max_degree(G),
        is_plane=plane,
        stretch=t,
        witness=witness,
        connected=math.isfinite(t),
        crossing=crossing,
    )


def shortest_path(G: GeometricGraph, u: int, v: int) -> list[int]:
    """Vertex sequence of one shortest ``u``-``v`` path (empty if disconnected)."""
    dist, pred = dijkstra(_csgraph(G), directed=False, indices=u, return_predecessors=True)
    if not np.isfinite(dist[v]):
        return []
    path = [v]
    while path[-1] != u:
        path.append(int(pred[path[-1]]))
    return path[::-1]
