"""Degree-3 plane spanners for non-uniform rectangular grids.

Rows and columns are 1-based as ``p[i, j] = (xs[j-1], ys[i-1])`` with row
``i`` counted bottom-up and column ``j`` left to right.  Internal edges are
split into red and blue by a parity rule so that each internal vertex sees
two of each; all red edges are dropped and then re-inserted slab by slab in
non-decreasing width order whenever both endpoints still have degree 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import GridTooSmall, InvalidInput
from .graph import GeometricGraph
from .verify import shortest_path_lengths

__all__ = [
    "Grid",
    "Slab",
    "classify_edges",
    "slabs",
    "build_grid_spanner",
    "grid_sweep",
    "missing_edge_detours",
    "lattice_graph",
    "cell_faces",
]

RED, BLUE, BOUNDARY = "red", "blue", "boundary"


@dataclass(frozen=True)
class Grid:
    xs: tuple[float, ...]
    ys: tuple[float, ...]

    def __post_init__(self):
        xs = tuple(float(v) for v in self.xs)
        ys = tuple(float(v) for v in self.ys)
        if not xs or not ys:
            raise InvalidInput("grid needs at least one row and one column")
        for name, seq in (("xs", xs), ("ys", ys)):
            if not all(math.isfinite(v) for v in seq):
                raise InvalidInput(f"{name} has non-finite entries")
            if any(b <= a for a, b in zip(seq, seq[1:])):
                raise InvalidInput(f"{name} must be strictly increasing")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)

    @property
    def m(self) -> int:
        """Number of horizontal lines (rows of vertices)."""
        return len(self.ys)

    @property
    def k(self) -> int:
        """Number of vertical lines (columns of vertices)."""
        return len(self.xs)

    def vid(self, i: int, j: int) -> int:
        return (i - 1) * self.k + (j - 1)

    def rc(self, v: int) -> tuple[int, int]:
        return v // self.k + 1, v % self.k + 1

    def points(self) -> list[tuple[float, float]]:
        return [(x, y) for y in self.ys for x in self.xs]

    def is_boundary(self, i: int, j: int) -> bool:
        return i in (1, self.m) or j in (1, self.k)


@dataclass(frozen=True)
class Slab:
    kind: str  # "horizontal" | "vertical"
    index: int
    width: float


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _lattice_edges(G: Grid) -> Iterator[tuple[int, int]]:
    for i in range(1, G.m + 1):
        for j in range(1, G.k + 1):
            if j < G.k:
                yield _edge(G.vid(i, j), G.vid(i, j + 1))
            if i < G.m:
                yield _edge(G.vid(i, j), G.vid(i + 1, j))


def lattice_graph(G: Grid) -> GeometricGraph:
    """The full grid graph, maximum degree 4."""
    return GeometricGraph.build(G.points(), _lattice_edges(G))


def _red_in_horizontal_slab(G: Grid, i: int) -> list[tuple[int, int]]:
    # vertical red edges p[i,j]-p[i+1,j], j internal with j = i (mod 2), left to right
    return [_edge(G.vid(i, j), G.vid(i + 1, j)) for j in range(2, G.k) if (i - j) % 2 == 0]


def _red_in_vertical_slab(G: Grid, j: int) -> list[tuple[int, int]]:
    # horizontal red edges p[i,j]-p[i,j+1], i internal with i = j (mod 2), bottom-up
    return [_edge(G.vid(i, j), G.vid(i, j + 1)) for i in range(2, G.m) if (i - j) % 2 == 0]


def classify_edges(G: Grid) -> dict[tuple[int, int], str]:
    """Colour every lattice edge red, blue or boundary."""
    if G.m < 3 or G.k < 3:
        raise GridTooSmall(f"need at least 3x3, got {G.m}x{G.k}")
    red = set()
    for i in range(1, G.m):
        red.update(_red_in_horizontal_slab(G, i))
    for j in range(1, G.k):
        red.update(_red_in_vertical_slab(G, j))
    colors = {}
    for e in _lattice_edges(G):
        ends = [G.rc(v) for v in e]
        if all(G.is_boundary(*rc) for rc in ends):
            colors[e] = BOUNDARY
        else:
            colors[e] = RED if e in red else BLUE
    return colors


def slabs(G: Grid) -> list[Slab]:
    """All slabs in processing order: width, then horizontal first, then index."""
    out = [Slab("horizontal", i, G.ys[i] - G.ys[i - 1]) for i in range(1, G.m)]
    out += [Slab("vertical", j, G.xs[j] - G.xs[j - 1]) for j in range(1, G.k)]
    out.sort(key=lambda s: (s.width, s.kind != "horizontal", s.index))
    return out


def grid_sweep(G: Grid, reverse_within_slab: bool = False):
    """Run the red-edge re-insertion sweep.

    Returns ``(edges, colors, inserted)`` where ``inserted`` lists the red
    edges put back, in insertion order.
    """
    colors = classify_edges(G)
    kept = [e for e, c in colors.items() if c != RED]
    deg = np.zeros(G.m * G.k, dtype=int)
    for u, v in kept:
        deg[u] += 1
        deg[v] += 1
    inserted = []
    for slab in slabs(G):
        if slab.kind == "horizontal":
            reds = _red_in_horizontal_slab(G, slab.index)
        else:
            reds = _red_in_vertical_slab(G, slab.index)
        if reverse_within_slab:
            reds = reds[::-1]
        for u, v in reds:
            if deg[u] == 2 and deg[v] == 2:
                inserted.append((u, v))
                deg[u] += 1
                deg[v] += 1
    return sorted(kept + inserted), colors, inserted


def build_grid_spanner(G: Grid, reverse_within_slab: bool = False) -> GeometricGraph:
    """Plane spanner of degree at most 3 on the grid vertices.

    Grids with fewer than three rows or columns are returned unchanged.
    """
    if G.m <= 2 or G.k <= 2:
        return lattice_graph(G)
    edges, _, _ = grid_sweep(G, reverse_within_slab)
    return GeometricGraph.build(G.points(), edges)


def missing_edge_detours(G: Grid, spanner: GeometricGraph) -> list[tuple[tuple[int, int], float]]:
    """For each red edge absent from ``spanner``: its shortest detour over its length."""
    colors = classify_edges(G)
    present = set(spanner.edges)
    missing = [e for e, c in sorted(colors.items()) if c == RED and e not in present]
    if not missing:
        return []
    sources = sorted({u for u, _ in missing})
    D = shortest_path_lengths(spanner, sources)
    row = {s: r for r, s in enumerate(sources)}
    P = spanner.coords()
    out = []
    for u, v in missing:
        length = float(np.hypot(*(P[u] - P[v])))
        out.append(((u, v), float(D[row[u], v]) / length))
    return out


def cell_faces(G: Grid, edges: Sequence[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    """Group grid cells into faces: neighbouring cells merge when their shared edge is absent.

    Valid only for subgraphs of the lattice that keep every boundary edge.
    Cells are named by their lower-left vertex ``(i, j)``.
    """
    present = set(_edge(u, v) for u, v in edges)
    parent = {}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for i in range(1, G.m):
        for j in range(1, G.k):
            parent[(i, j)] = (i, j)
    for i in range(1, G.m):
        for j in range(1, G.k):
            # right neighbour shares vertical edge p[i,j+1]-p[i+1,j+1]
            if j + 1 < G.k and _edge(G.vid(i, j + 1), G.vid(i + 1, j + 1)) not in present:
                parent[find((i, j))] = find((i, j + 1))
            # upper neighbour shares horizontal edge p[i+1,j]-p[i+1,j+1]
            if i + 1 < G.m and _edge(G.vid(i + 1, j), G.vid(i + 1, j + 1)) not in present:
                parent[find((i, j))] = find((i + 1, j))
    groups: dict = {}
    for c in parent:
        groups.setdefault(find(c), []).append(c)
    return sorted(sorted(g) for g in groups.values())
