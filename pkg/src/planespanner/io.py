"""JSON file formats.

* points: ``{"points": [[x, y], ...]}``
* grid:   ``{"xs": [...], "ys": [...]}``
* graph:  ``{"vertices": [[x, y], ...], "edges": [[i, j], ...], "steiner": [bool, ...]}``

``json`` writes floats with ``repr``, the shortest decimal that round-trips,
so coordinates survive a dump/load cycle bit for bit.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .errors import InvalidInput
from .geometry import as_points
from .graph import GeometricGraph
from .grid import Grid

__all__ = ["dumps", "loads", "points_doc", "grid_doc", "graph_doc", "parse"]


def points_doc(points) -> dict:
    return {"points": [[float(x), float(y)] for x, y in np.asarray(points, dtype=float).reshape(-1, 2)]}


def grid_doc(grid: Grid) -> dict:
    return {"xs": list(grid.xs), "ys": list(grid.ys)}


def graph_doc(G: GeometricGraph) -> dict:
    doc: dict[str, Any] = {
        "vertices": [[p.x, p.y] for p in G.points],
        "edges": [[i, j] for i, j in G.edges],
    }
    if G.steiner is not None:
        doc["steiner"] = list(G.steiner)
    return doc


def dumps(obj) -> str:
    if isinstance(obj, GeometricGraph):
        doc = graph_doc(obj)
    elif isinstance(obj, Grid):
        doc = grid_doc(obj)
    elif isinstance(obj, dict):
        doc = obj
    else:
        doc = points_doc(obj)
    return json.dumps(doc, allow_nan=False) + "\n"


def parse(doc: dict):
    """Turn a decoded document into a point tuple, :class:`Grid` or :class:`GeometricGraph`."""
    if not isinstance(doc, dict):
        raise InvalidInput("top-level JSON value must be an object")
    try:
        if "vertices" in doc:
            return GeometricGraph.build(doc["vertices"], doc.get("edges", []), doc.get("steiner"))
        if "xs" in doc and "ys" in doc:
            return Grid(tuple(doc["xs"]), tuple(doc["ys"]))
        if "points" in doc:
            return as_points(doc["points"])
    except (TypeError, KeyError) as exc:
        raise InvalidInput(f"malformed document: {exc}") from exc
    raise InvalidInput("expected one of the keys 'points', 'xs'/'ys', 'vertices'")


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"invalid JSON: {exc}") from exc
    return parse(doc)
