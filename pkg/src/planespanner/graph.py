from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidInput
from .geometry import Point, as_points

__all__ = ["GeometricGraph", "normalize_edges"]


def normalize_edges(edges: Iterable[Sequence[int]], n: int) -> tuple[tuple[int, int], ...]:
    """Sort each edge as ``(min, max)``, reject loops/out-of-range, drop nothing silently."""
    out = set()
    for e in edges:
        i, j = int(e[0]), int(e[1])
        if i == j:
            raise InvalidInput(f"self-loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidInput(f"edge {(i, j)} out of range for {n} vertices")
        key = (i, j) if i < j else (j, i)
        if key in out:
            raise InvalidInput(f"duplicate edge {key}")
        out.add(key)
    return tuple(sorted(out))


@dataclass(frozen=True)
class GeometricGraph:
    """Straight-line graph: vertex coordinates plus undirected edges.

    ``steiner`` flags auxiliary vertices; ``None`` means every vertex is an
    original input point.
    """

    points: tuple[Point, ...]
    edges: tuple[tuple[int, int], ...]
    steiner: tuple[bool, ...] | None = None

    @classmethod
    def build(cls, points, edges, steiner=None) -> "GeometricGraph":
        pts = as_points(points)
        if steiner is not None:
            steiner = tuple(bool(s) for s in steiner)
            if len(steiner) != len(pts):
                raise InvalidInput("steiner mask length differs from vertex count")
        return cls(pts, normalize_edges(edges, len(pts)), steiner)

    @property
    def n(self) -> int:
        return len(self.points)

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=int)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def original_indices(self) -> list[int]:
        if self.steiner is None:
            return list(range(self.n))
        return [i for i, s in enumerate(self.steiner) if not s]

    def coords(self) -> np.ndarray:
        return np.asarray(self.points, dtype=float).reshape(-1, 2)

    def edge_lengths(self) -> np.ndarray:
        if not self.edges:
            return np.zeros(0)
        P = self.coords()
        E = np.asarray(self.edges)
        return np.hypot(*(P[E[:, 0]] - P[E[:, 1]]).T)
