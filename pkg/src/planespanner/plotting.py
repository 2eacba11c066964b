"""Matplotlib figures written next to the JSON reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.collections import LineCollection  # noqa: E402

from .bounds import BoundDomain, ScanResult, _x_limits, eval_f, eval_g  # noqa: E402
from .graph import GeometricGraph  # noqa: E402
from .verify import SpannerReport, shortest_path  # noqa: E402

__all__ = ["plot_report", "plot_bound_scan"]

_RC = {
    "font.size": 9,
    "axes.titlesize": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}


def plot_report(G: GeometricGraph, report: SpannerReport, path) -> Path:
    """Draw the graph, the stretch witness with its shortest path, and any crossing pair."""
    path = Path(path)
    P = G.coords()
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(5, 5))
        if G.edges:
            segs = P[np.asarray(G.edges)]
            ax.add_collection(LineCollection(segs, colors="0.35", linewidths=0.8))
        mask = np.array(G.steiner, dtype=bool) if G.steiner is not None else np.zeros(G.n, bool)
        if G.n:
            ax.plot(P[~mask, 0], P[~mask, 1], "o", color="k", ms=3, zorder=3)
            if mask.any():
                ax.plot(P[mask, 0], P[mask, 1], "o", mfc="white", mec="k", ms=2, mew=0.5, zorder=3)
        if report.witness is not None and report.connected:
            u, v = report.witness
            route = shortest_path(G, u, v)
            ax.plot(P[route, 0], P[route, 1], "-", color="tab:orange", lw=2, zorder=2,
                    label=f"witness path, stretch {report.stretch:.4f}")
            ax.plot(P[[u, v], 0], P[[u, v], 1], ":", color="tab:orange", lw=1)
        if report.crossing is not None:
            for e in report.crossing:
                ax.plot(P[list(e), 0], P[list(e), 1], "-", color="tab:red", lw=2, zorder=4)
            ax.plot([], [], "-", color="tab:red", label="crossing edges")
        ax.set_aspect("equal")
        ax.autoscale()
        ax.set_title(f"max degree {report.max_degree}, plane: {report.is_plane}")
        if ax.get_legend_handles_labels()[0]:
            ax.legend(loc="best", frameon=False)
        fig.savefig(path)
        plt.close(fig)
    return path


def plot_bound_scan(domain: BoundDomain, result: ScanResult, path, resolution: int = 300) -> Path:
    """Heat map of the scanned function over its box with the maximiser marked."""
    path = Path(path)
    fn = eval_f if domain.function == "f" else eval_g
    a = np.linspace(*domain.alpha_range, resolution)[:, None]
    s = np.linspace(0.0, 1.0, resolution)[None, :]
    lo, hi = _x_limits(domain, a)
    X = lo + s * (hi - lo)
    A = np.broadcast_to(a, X.shape)
    V = fn(X, A)
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(5.5, 4))
        mesh = ax.pcolormesh(X, A, V, shading="auto", cmap="viridis")
        fig.colorbar(mesh, ax=ax, label=f"{domain.function}(x, alpha)")
        ax.plot(*result.argmax, "r*", ms=10, label=f"max {result.max_value:.6f}")
        ax.set_xlabel("x")
        ax.set_ylabel("alpha (rad)")
        ax.set_title(f"{domain.function}: bound {result.bound:.6f}, satisfied: {result.satisfied}")
        ax.legend(loc="best", frameon=False)
        fig.savefig(path)
        plt.close(fig)
    return path
