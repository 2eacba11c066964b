"""Bounded-degree plane spanners: convex position, non-uniform grids, Steiner augmentation."""

from .bounds import BoundDomain, eval_f, eval_g, scan_max
from .convex import build_convex_spanner, chain_stretch, matching
from .errors import SpannerError
from .geometry import (
    Disk,
    Lune,
    Point,
    closest_pair,
    convex_hull,
    diametral_pair,
    disk_contains,
    is_centrally_symmetric,
    is_convex_position,
    lune_contains,
    orientation,
    segments_properly_intersect,
)
from .graph import GeometricGraph
from .grid import Grid, build_grid_spanner, classify_edges, missing_edge_detours
from .steiner import augment_to_degree3, count_bound
from .verify import SpannerReport, max_degree, stretch_factor, verify, verify_planarity

__all__ = [
    "BoundDomain",
    "eval_f",
    "eval_g",
    "scan_max",
    "build_convex_spanner",
    "chain_stretch",
    "matching",
    "SpannerError",
    "Disk",
    "Lune",
    "Point",
    "closest_pair",
    "convex_hull",
    "diametral_pair",
    "disk_contains",
    "is_centrally_symmetric",
    "is_convex_position",
    "lune_contains",
    "orientation",
    "segments_properly_intersect",
    "GeometricGraph",
    "Grid",
    "build_grid_spanner",
    "classify_edges",
    "missing_edge_detours",
    "augment_to_degree3",
    "count_bound",
    "SpannerReport",
    "max_degree",
    "stretch_factor",
    "verify",
    "verify_planarity",
]

__version__ = "0.1.0"
