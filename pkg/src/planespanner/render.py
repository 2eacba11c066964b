"""Plain SVG output for graphs and grid constructions.

Edges become ``<line>`` elements and vertices ``<circle>`` elements, so the
files are easy to inspect and count.  The y axis is flipped to keep the
mathematical orientation.
"""

from __future__ import annotations

from pathlib import Path

from .graph import GeometricGraph
from .grid import BLUE, BOUNDARY, RED, Grid, classify_edges, lattice_graph

__all__ = ["render_svg", "svg_string"]

_STYLE = {
    "edge": 'stroke="#222" stroke-width="{w}"',
    BOUNDARY: 'stroke="#222" stroke-width="{w}"',
    BLUE: 'stroke="#1f5fbf" stroke-width="{w}"',
    RED: 'stroke="#d62728" stroke-width="{w}"',
    "reinserted": 'stroke="#d62728" stroke-width="{wb}"',
    "missing": 'stroke="#d62728" stroke-width="{w}" stroke-dasharray="{dash}" stroke-opacity="0.5"',
}


def _frame(points):
    if not points:
        return 0.0, 0.0, 1.0, 1.0
    xs = [p[0] for p in points]
    ys = [-p[1] for p in points]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    pad = 0.05 * span
    return x0 - pad, y0 - pad, (x1 - x0) + 2 * pad, (y1 - y0) + 2 * pad


def svg_string(obj: GeometricGraph | Grid, grid: Grid | None = None) -> str:
    """SVG text for a graph, a bare grid (red/blue classes), or a grid spanner.

    Passing ``grid`` alongside a graph built from it colours blue edges blue
    and draws re-inserted red edges bold; missing red edges appear dashed.
    """
    classes: dict = {}
    extra: list = []
    if isinstance(obj, Grid):
        grid = obj
        G = lattice_graph(obj)
        if obj.m >= 3 and obj.k >= 3:
            classes = dict(classify_edges(obj))
    else:
        G = obj
        if grid is not None and grid.m >= 3 and grid.k >= 3:
            present = set(G.edges)
            for e, c in classify_edges(grid).items():
                if c == RED:
                    if e in present:
                        classes[e] = "reinserted"
                    else:
                        extra.append(e)
                else:
                    classes[e] = c

    x, y, w, h = _frame(G.points)
    unit = max(w, h) / 400.0
    fmt = {"w": f"{1.5 * unit:.6g}", "wb": f"{4 * unit:.6g}", "dash": f"{4 * unit:.6g}"}
    radius = 3 * unit

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x!r} {y!r} {w!r} {h!r}">',
    ]
    P = G.points
    for i, j in G.edges:
        style = _STYLE[classes.get((i, j), "edge")].format(**fmt)
        out.append(f'<line x1="{P[i].x!r}" y1="{-P[i].y!r}" x2="{P[j].x!r}" y2="{-P[j].y!r}" {style}/>')
    for i, j in extra:
        style = _STYLE["missing"].format(**fmt)
        out.append(
            f'<line class="missing" x1="{P[i].x!r}" y1="{-P[i].y!r}" x2="{P[j].x!r}" y2="{-P[j].y!r}" {style}/>'
        )
    steiner = G.steiner or (False,) * G.n
    for p, s in zip(P, steiner):
        fill = 'fill="white" stroke="#222"' if s else 'fill="#222"'
        out.append(f'<circle cx="{p.x!r}" cy="{-p.y!r}" r="{radius:.6g}" {fill} stroke-width="{fmt["w"]}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(obj: GeometricGraph | Grid, path, grid: Grid | None = None) -> Path:
    path = Path(path)
    path.write_text(svg_string(obj, grid))
    return path
