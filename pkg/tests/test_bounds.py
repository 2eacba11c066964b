import math

import numpy as np
import pytest

from planespanner.bounds import (
    F_BOUND,
    G_BOUND,
    BoundDomain,
    default_domain,
    eval_f,
    eval_g,
    scan_max,
)
from planespanner.errors import DomainError, InvalidInput
from planespanner.geometry import convex_hull

PI = math.pi


# reference forms run in extended precision: the g form cancels badly near x = 0
LD = np.longdouble


def f_ab(alpha, a, b):
    return (1 - np.sqrt(a * a + b * b) + alpha) / np.sqrt(a * a + (1 - b) ** 2)


def g_ab(alpha, a, b):
    d = np.sqrt(a * a + (1 - b) ** 2)
    return (6 * alpha - LD(PI)) / (3 * d) - (a * a + (1 - b) ** 2 - 1) / (np.sqrt(a * a + b * b) * d)


# -------------------------------------------------------------- point values

def test_f_examples():
    assert eval_f(1.0, PI / 3) == pytest.approx(PI / 3, abs=1e-15)
    assert eval_f(1e-9, 0.5) == pytest.approx(1.5, abs=1e-8)
    x_star = (PI - 3) / (2 * PI + 3)
    assert eval_f(x_star, PI / 3) == pytest.approx(F_BOUND, abs=1e-14)
    assert F_BOUND == pytest.approx(2.04738, abs=1e-5)


def test_g_examples():
    for alpha in np.linspace(PI / 3, PI / 2 - 1e-6, 7):
        assert eval_g(2 * math.cos(alpha), alpha) == pytest.approx(2 * alpha - PI / 3, abs=1e-12)
    assert eval_g(1e-12, PI / 2) == pytest.approx(2 * PI / 3, abs=1e-9)
    assert eval_g(1.0, PI / 3) == pytest.approx(PI / 3, abs=1e-15)


def test_vectorised_matches_scalar():
    xs = np.array([0.1, 0.5, 1.0])
    al = np.array([0.2, 0.7, 1.0])
    assert np.allclose(eval_f(xs, al), [eval_f(x, a) for x, a in zip(xs, al)], rtol=0, atol=0)


def test_zero_denominator_raises():
    # x = 1, alpha = 0 puts v on p
    with pytest.raises(DomainError):
        eval_f(1.0, 0.0)


# -------------------------------------------------------------- two transcriptions agree

def test_f_agrees_with_ab_form(rng):
    x = rng.uniform(0, 1, 100_000)
    x = np.where(x == 0, 1.0, x)
    alpha = rng.uniform(0, PI / 3, 100_000)
    alpha = np.where(alpha == 0, PI / 3, alpha)
    ours = eval_f(x, alpha)
    xl, al = x.astype(LD), alpha.astype(LD)
    ref = f_ab(al, xl * np.sin(al), xl * np.cos(al))
    assert np.max(np.abs(ours - ref)) <= 1e-12


def test_g_agrees_with_ab_form(rng):
    alpha = rng.uniform(PI / 3, PI / 2, 100_000)
    x = rng.uniform(0, 1, 100_000) * 2 * np.cos(alpha)
    x = np.where(x == 0, 1.0, x)
    ours = eval_g(x, alpha)
    xl, al = x.astype(LD), alpha.astype(LD)
    ref = g_ab(al, xl * np.sin(al), xl * np.cos(al))
    assert np.max(np.abs(ours - ref)) <= 1e-12


# -------------------------------------------------------------- the geometry behind f

def test_convex_chains_in_case_region_respect_f(rng):
    """Chains from p to v inside the region cut off by pv, qv and the unit arc around q."""
    p, q = np.array([0.0, 0.0]), np.array([1.0, 0.0])
    for _ in range(300):
        alpha = rng.uniform(1e-3, PI / 3)
        x = rng.uniform(1e-3, 1.0)
        u = np.array([-math.cos(alpha), math.sin(alpha)])
        v = q + x * u
        arc = [q + np.array([math.cos(PI - t), math.sin(PI - t)]) for t in np.linspace(0, alpha, 60)]
        pts = [p, v] + arc
        # the region is convex, so mixtures of its corner points stay inside it
        corners = np.array(pts)
        for w in rng.dirichlet(np.full(3, 0.3), 30):
            pts.append(w @ corners[rng.choice(len(corners), 3, replace=False)])
        # keep a random subset so chains range from the full boundary to short cuts
        keep = [0, 1] + [k for k in range(2, len(pts)) if rng.random() < 0.6]
        sub = [tuple(pts[k]) for k in keep]
        hull = convex_hull(sub)
        perimeter = sum(math.dist(sub[hull[k]], sub[hull[(k + 1) % len(hull)]]) for k in range(len(hull)))
        pv = math.dist(p, v)
        ratio = (perimeter - pv) / pv
        assert ratio <= eval_f(x, alpha) + 1e-9


# -------------------------------------------------------------- scans

def test_scan_f():
    res = scan_max(default_domain("f"))
    assert 2.0473 <= res.max_value <= 2.047381
    assert res.satisfied
    x_star = (PI - 3) / (2 * PI + 3)
    assert abs(res.argmax[0] - x_star) <= 1e-3 and abs(res.argmax[1] - PI / 3) <= 1e-3


def test_scan_g():
    res = scan_max(default_domain("g"))
    assert 2.0943 <= res.max_value <= G_BOUND + 1e-9
    assert res.satisfied
    assert res.argmax[0] <= 1e-3 and abs(res.argmax[1] - PI / 2) <= 1e-3


def test_scan_small_corner_box():
    dom = BoundDomain("f", (0.9, 1.0), (1e-9, 0.1), steps=400)
    res = scan_max(dom)
    assert res.satisfied
    # brute-force reference on an independent grid
    X, A = np.meshgrid(np.linspace(0.9, 1.0, 1001), np.linspace(1e-9, 0.1, 1001))
    ref = float(np.max(eval_f(X, A)))
    assert ref <= res.max_value <= ref + 1e-6
    # the corner value alone already exceeds 1.2
    assert res.max_value >= eval_f(0.9, 0.1) > 1.45


def test_scan_result_dict():
    d = scan_max(default_domain("g", steps=200)).to_dict()
    assert set(d) == {"max", "argmax", "bound", "satisfied"}
    assert set(d["argmax"]) == {"x", "alpha"}


@pytest.mark.parametrize(
    "args",
    [
        ("h", (0.1, 1.0), (0.1, 1.0)),
        ("f", (0.0, 1.0), (0.1, 1.0)),
        ("f", (0.1, 1.0), (0.1, 1.2)),
        ("g", (0.1, None), (0.5, 1.0)),
    ],
)
def test_domain_validation(args):
    with pytest.raises(InvalidInput):
        BoundDomain(*args)
