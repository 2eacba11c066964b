"""Seeded instance generators for the property corpora and the CLI."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SpecError
from .geometry import convex_hull, orientation, orientation_filter
from .grid import Grid

__all__ = ["KINDS", "InstanceSpec", "generate", "convex_curve"]

KINDS = ("convex-random", "regular-ngon", "symmetric-convex", "grid", "general-random")

_MAX_REPAIR_ROUNDS = 200


@dataclass(frozen=True)
class InstanceSpec:
    kind: str
    n: int | None = None
    rows: int | None = None
    cols: int | None = None
    seed: int = 0
    scale: float = 1.0

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise SpecError(f"unknown kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if not (self.scale > 0 and math.isfinite(self.scale)):
            raise SpecError("scale must be positive and finite")
        if self.kind == "grid":
            if self.rows is None or self.cols is None:
                raise SpecError("grid needs rows and cols")
            if self.rows < 1 or self.cols < 1:
                raise SpecError("rows and cols must be at least 1")
            if self.n is not None and self.n != self.rows * self.cols:
                raise SpecError(f"n={self.n} contradicts rows*cols={self.rows * self.cols}")
            return
        if self.n is None or self.n < 1:
            raise SpecError("n must be at least 1")
        if self.rows is not None or self.cols is not None:
            raise SpecError(f"rows/cols do not apply to {self.kind}")
        if self.kind == "regular-ngon" and self.n < 3:
            raise SpecError("a regular polygon needs n >= 3")
        if self.kind == "symmetric-convex" and self.n % 2:
            raise SpecError("symmetric-convex needs an even n (points come in +/- pairs)")


def convex_curve(rng: np.random.Generator, symmetric: bool = False):
    """Random smooth strictly convex closed curve ``theta -> (x, y)``.

    Built from a support function ``h = 1 + sum a_k cos(k t + phi_k)`` with
    ``sum |a_k| (k^2 - 1) < 1`` (so ``h + h'' > 0``), then a random linear
    map.  Only even harmonics are used when ``symmetric`` so the curve is
    centrally symmetric about the origin.
    """
    ks = np.array([2, 4]) if symmetric else np.array([2, 3, 4])
    budget = rng.uniform(0.0, 0.9)
    w = rng.dirichlet(np.ones(len(ks)))
    amps = budget * w / (ks**2 - 1)
    phases = rng.uniform(0, 2 * np.pi, len(ks))
    stretch = math.exp(rng.uniform(-1.0, 1.0))
    rot = rng.uniform(0, 2 * np.pi)
    c, s = math.cos(rot), math.sin(rot)
    M = np.array([[c, -s], [s, c]]) @ np.diag([1.0, stretch])

    def at(theta):
        theta = np.asarray(theta, dtype=float)
        arg = ks[:, None] * theta[None, :] + phases[:, None]
        h = 1.0 + (amps[:, None] * np.cos(arg)).sum(axis=0)
        dh = -(amps[:, None] * ks[:, None] * np.sin(arg)).sum(axis=0)
        x = h * np.cos(theta) - dh * np.sin(theta)
        y = h * np.sin(theta) + dh * np.cos(theta)
        return (M @ np.vstack([x, y])).T

    return at


def _angles(rng, count, lo, hi):
    # half the time cluster the angles to produce long, nearly flat runs
    if rng.random() < 0.5:
        return rng.uniform(lo, hi, count)
    centers = rng.uniform(lo, hi, max(1, count // 8))
    t = rng.choice(centers, count) + rng.normal(0, (hi - lo) / 40, count)
    return lo + np.mod(t - lo, hi - lo)


def _convex_random(rng, n, scale):
    curve = convex_curve(rng)
    pts = np.zeros((0, 2))
    for _ in range(_MAX_REPAIR_ROUNDS):
        need = n - len(pts)
        if need == 0:
            return pts * scale
        fresh = curve(_angles(rng, need, 0.0, 2 * np.pi))
        cand = np.vstack([pts, fresh])
        cand = np.unique(cand, axis=0)
        hull = convex_hull([tuple(p) for p in cand])
        pts = cand[hull]
    raise SpecError("could not repair strict convexity")


def _symmetric_convex(rng, n, scale):
    m = n // 2
    curve = convex_curve(rng, symmetric=True)
    half = np.zeros((0, 2))
    for _ in range(_MAX_REPAIR_ROUNDS):
        need = m - len(half)
        if need == 0:
            return np.vstack([half, -half]) * scale
        fresh = curve(_angles(rng, need, 0.0, np.pi))
        cand = np.unique(np.vstack([half, fresh]), axis=0)
        both = np.vstack([cand, -cand])
        hull = set(convex_hull([tuple(p) for p in both]))
        # keep a point only if it and its mirror image are strict hull vertices
        keep = [i for i in range(len(cand)) if i in hull and i + len(cand) in hull]
        half = cand[keep][:m]
    raise SpecError("could not repair strict convexity")


def _regular_ngon(n, scale):
    R = scale / (2 * math.sin(math.pi / n))
    t = -math.pi / 2 + math.pi / n + 2 * math.pi * np.arange(n) / n
    pts = np.column_stack([R * np.cos(t), R * np.sin(t)])
    return np.round(pts, 12) + 0.0  # + 0.0 turns -0.0 into 0.0


def _general_random(rng, n, scale):
    pts: list[tuple[float, float]] = []
    tries = 0
    while len(pts) < n:
        tries += 1
        if tries > 100 * n + 1000:
            raise SpecError("could not place points in general position")
        c = tuple(rng.uniform(0, scale, 2))
        if c in pts:
            continue
        if len(pts) >= 2:
            P = np.asarray(pts)
            iu, ju = np.triu_indices(len(pts), k=1)
            a, b = P[iu], P[ju]
            cc = np.broadcast_to(np.asarray(c), a.shape)
            sign, certain = orientation_filter(*a.T, *b.T, *cc.T)
            if np.any(certain & (sign == 0)):
                continue
            if any(orientation(pts[i], pts[j], c) == 0 for i, j in zip(iu[~certain], ju[~certain])):
                continue
        pts.append(c)
    return np.asarray(pts)


def generate(spec: InstanceSpec):
    """Points as an ``(n, 2)`` array, or a :class:`Grid` for ``kind='grid'``."""
    spec.validate()
    rng = np.random.default_rng(spec.seed)
    if spec.kind == "grid":
        xs = np.concatenate([[0.0], np.cumsum(rng.uniform(1.0, 10.0, spec.cols - 1))]) * spec.scale
        ys = np.concatenate([[0.0], np.cumsum(rng.uniform(1.0, 10.0, spec.rows - 1))]) * spec.scale
        return Grid(tuple(xs), tuple(ys))
    if spec.kind == "regular-ngon":
        return _regular_ngon(spec.n, spec.scale)
    if spec.kind == "convex-random":
        return _convex_random(rng, spec.n, spec.scale)
    if spec.kind == "symmetric-convex":
        return _symmetric_convex(rng, spec.n, spec.scale)
    return _general_random(rng, spec.n, spec.scale)
