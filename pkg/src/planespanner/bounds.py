"""Numerical certification of the two chain-ratio bound functions.

With ``|pq| = 1``, ``x = |qv|`` and ``alpha`` the angle at ``q``, the
along-chain path from ``p`` to ``v`` inside the lune is bounded by

* ``f(x, a) = (1 - x + a) / |pv|`` for ``0 < a <= pi/3``, ``0 < x <= 1``;
* ``g(x, a) = (2(a + cos a) - x - pi/3) / |pv|`` for ``pi/3 <= a <= pi/2``,
  ``0 < x <= 2 cos a``;

where ``|pv| = sqrt((x sin a)^2 + (1 - x cos a)^2)``.  Writing
``a_ = x sin a`` and ``b_ = x cos a`` gives ``|pv| = sqrt(a_^2 + (1-b_)^2)``
and ``x = sqrt(a_^2 + b_^2)``.  The claimed suprema are
``sqrt(1 + (3 + 2 pi)^2 / 27) ~ 2.04738`` for ``f`` and ``2 pi / 3`` for ``g``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidInput

__all__ = [
    "F_BOUND",
    "G_BOUND",
    "BoundDomain",
    "ScanResult",
    "eval_f",
    "eval_g",
    "default_domain",
    "scan_max",
]

F_BOUND = math.sqrt(1.0 + (3.0 + 2.0 * math.pi) ** 2 / 27.0)
G_BOUND = 2.0 * math.pi / 3.0
# x = 0 is outside both domains; scans start this far in
X_FLOOR = 1e-9


def _pv(x, alpha):
    return np.sqrt((x * np.sin(alpha)) ** 2 + (1.0 - x * np.cos(alpha)) ** 2)


def _checked(num, den):
    den = np.asarray(den)
    if np.any(den == 0):
        raise DomainError("|pv| vanishes: v coincides with p")
    out = num / den
    return float(out) if np.ndim(out) == 0 else out


def eval_f(x, alpha):
    """Ratio bound for ``alpha <= pi/3``; accepts scalars or arrays."""
    return _checked(1.0 - x + alpha, _pv(x, alpha))


def eval_g(x, alpha):
    """Ratio bound for ``pi/3 <= alpha <= pi/2``; accepts scalars or arrays."""
    return _checked(2.0 * (alpha + np.cos(alpha)) - (x + math.pi / 3.0), _pv(x, alpha))


@dataclass(frozen=True)
class BoundDomain:
    """Scan box for ``f`` or ``g``.

    ``x_range`` is absolute for ``f``.  For ``g`` its upper end may be
    ``None``, meaning the moving limit ``2 cos(alpha)``.
    """

    function: str
    x_range: tuple[float, float | None]
    alpha_range: tuple[float, float]
    steps: int = 2000

    def __post_init__(self):
        if self.function not in ("f", "g"):
            raise InvalidInput(f"unknown function {self.function!r}")
        if self.steps < 2:
            raise InvalidInput("steps must be at least 2")
        a0, a1 = self.alpha_range
        x0, x1 = self.x_range
        if self.function == "f":
            ok = 0 < a0 <= a1 <= math.pi / 3 and 0 < x0 <= (x1 if x1 is not None else 1.0) <= 1.0
        else:
            ok = math.pi / 3 <= a0 <= a1 <= math.pi / 2 and 0 < x0 and (x1 is None or x1 >= x0)
        if not ok:
            raise InvalidInput(f"box {self.x_range} x {self.alpha_range} leaves the domain of {self.function}")

    @property
    def bound(self) -> float:
        return F_BOUND if self.function == "f" else G_BOUND


def default_domain(function: str, steps: int = 2000) -> BoundDomain:
    if function == "f":
        return BoundDomain("f", (X_FLOOR, 1.0), (X_FLOOR, math.pi / 3), steps)
    if function == "g":
        return BoundDomain("g", (X_FLOOR, None), (math.pi / 3, math.pi / 2), steps)
    raise InvalidInput(f"unknown function {function!r}")


@dataclass(frozen=True)
class ScanResult:
    max_value: float
    argmax: tuple[float, float]  # (x, alpha)
    bound: float
    satisfied: bool

    def to_dict(self) -> dict:
        return {
            "max": self.max_value,
            "argmax": {"x": self.argmax[0], "alpha": self.argmax[1]},
            "bound": self.bound,
            "satisfied": self.satisfied,
        }


def _x_limits(dom: BoundDomain, alpha: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    x0, x1 = dom.x_range
    if x1 is None:
        hi = 2.0 * np.cos(alpha)
    else:
        hi = np.full_like(alpha, x1)
        if dom.function == "g":
            hi = np.minimum(hi, 2.0 * np.cos(alpha))
    lo = np.minimum(x0, hi)
    return lo, hi


def _scan_box(dom, fn, s_lo, s_hi, a_lo, a_hi, steps, rows_per_chunk=256):
    """Max of ``fn`` over a ``steps x steps`` grid in (relative x, alpha)."""
    s = np.linspace(s_lo, s_hi, steps)
    alphas = np.linspace(a_lo, a_hi, steps)
    best = (-math.inf, 0.0, 0.0, 0.0)
    for start in range(0, steps, rows_per_chunk):
        A = alphas[start:start + rows_per_chunk, None]
        lo, hi = _x_limits(dom, A)
        X = lo + s[None, :] * (hi - lo)
        V = fn(X, A)
        V = np.where(np.isfinite(V), V, -np.inf)
        r, c = np.unravel_index(np.argmax(V), V.shape)
        if V[r, c] > best[0]:
            best = (float(V[r, c]), float(X[r, c]), float(A[r, 0]), float(s[c]))
    ds = (s_hi - s_lo) / (steps - 1)
    da = (a_hi - a_lo) / (steps - 1)
    return best, ds, da


def scan_max(domain: BoundDomain, refinements: int = 3) -> ScanResult:
    """Dense grid scan, then ``refinements`` zoomed re-scans around the running maximum.

    The x axis is sampled relative to its (possibly alpha-dependent) limits,
    so every sample lies inside the domain.
    """
    fn = eval_f if domain.function == "f" else eval_g
    a_lo, a_hi = domain.alpha_range

    best, ds, da = _scan_box(domain, fn, 0.0, 1.0, a_lo, a_hi, domain.steps)
    for _ in range(refinements):
        _, _, a_star, s_star = best
        cand, ds, da = _scan_box(
            domain,
            fn,
            max(0.0, s_star - ds),
            min(1.0, s_star + ds),
            max(a_lo, a_star - da),
            min(a_hi, a_star + da),
            domain.steps,
        )
        if cand[0] > best[0]:
            best = cand
    value, x, a, _ = best
    # re-evaluate through the public function so the reported value is reproducible
    value = fn(x, a)
    return ScanResult(value, (x, a), domain.bound, value <= domain.bound + 1e-9)
