"""Property-based invariants for the geometric primitives and patches."""

import math
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from conftest import catalog_names, get_tiling
from tilebalance.geometry import (
    Disk,
    circumradius,
    clip_convex,
    inscribed_radius,
    min_enclosing_radius,
    patch,
    patch_census,
    point_in_convex,
    polygon_area,
    polygon_centroid,
)
from tilebalance.periodic import limit_stats


def pytest_approx(x):
    import pytest
    return pytest.approx(x, rel=1e-6, abs=1e-9)


def regular_ngon(m, R, rot, cx, cy):
    return [(cx + R * math.cos(rot + 2 * math.pi * k / m),
             cy + R * math.sin(rot + 2 * math.pi * k / m)) for k in range(m)]


@given(m=st.integers(3, 12),
       R=st.floats(0.1, 10.0),
       rot=st.floats(0.0, 7.0),
       cx=st.floats(-5.0, 5.0),
       cy=st.floats(-5.0, 5.0))
def test_primitives_against_regular_polygon_formulas(m, R, rot, cx, cy):
    poly = regular_ngon(m, R, rot, cx, cy)
    exact_area = 0.5 * m * R * R * math.sin(2 * math.pi / m)
    assert polygon_area(poly) == pytest_approx(exact_area)
    gx, gy = polygon_centroid(poly)
    assert math.hypot(gx - cx, gy - cy) < 1e-7 * max(1.0, R)
    assert point_in_convex((cx, cy), poly)
    assert inscribed_radius(poly) == pytest_approx(R * math.cos(math.pi / m))
    assert min_enclosing_radius(poly) == pytest_approx(R)


def _rect(x, y, w, h):
    return [(x, y), (x + w, y), (x + w, y + h), (x, y + h)]


@given(x1=st.floats(-3, 3), y1=st.floats(-3, 3),
       w1=st.floats(0.1, 3), h1=st.floats(0.1, 3),
       x2=st.floats(-3, 3), y2=st.floats(-3, 3),
       w2=st.floats(0.1, 3), h2=st.floats(0.1, 3))
def test_clip_convex_matches_rectangle_overlap(x1, y1, w1, h1, x2, y2, w2, h2):
    a, b = _rect(x1, y1, w1, h1), _rect(x2, y2, w2, h2)
    ow = max(0.0, min(x1 + w1, x2 + w2) - max(x1, x2))
    oh = max(0.0, min(y1 + h1, y2 + h2) - max(y1, y2))
    inter = clip_convex(a, b)
    area = polygon_area(inter) if len(inter) >= 3 else 0.0
    assert abs(area - ow * oh) < 1e-9 * max(1.0, w1 * h1, w2 * h2)
    assert area <= min(w1 * h1, w2 * h2) + 1e-9


@settings(max_examples=30, deadline=None)
@given(cx=st.floats(0.0, 1.0), cy=st.floats(0.0, 1.0),
       k=st.floats(2.0, 8.0))
def test_square_patch_invariants(cx, cy, k):
    tiling = get_tiling("square")
    U = circumradius(tiling)
    p = patch(tiling, Disk((cx, cy), k * U))
    keys1 = {t.key for t in p.f1}
    keys2 = {t.key for t in p.f2}
    keys3 = {t.key for t in p.f3}
    assert keys1 and not (keys1 & keys2) and not (keys1 & keys3) \
        and not (keys2 & keys3)
    c = patch_census(p, tiling)
    assert c.v - c.e + c.t == 1
    assert c.t == len(keys1) + len(keys2) + len(keys3)
    assert all(j >= 3 for j in c.v_j)
    assert sum(c.v_j.values()) == c.v
    assert sum(c.t_h.values()) == c.t


@settings(max_examples=25, deadline=None)
@given(name=st.sampled_from(catalog_names()))
def test_limit_stats_rational_consistency(name):
    stats = limit_stats(get_tiling(name))
    assert sum(stats.t_h.values(), Fraction(0)) == 1
    assert sum(stats.v_j.values(), Fraction(0)) == stats.v
    two_e = 2 * stats.e
    assert sum((j * q for j, q in stats.v_j.items()), Fraction(0)) == two_e
    assert stats.sum_h_t_h == two_e
    assert sum(stats.w_j.values(), Fraction(0)) == 1
    assert stats.v == stats.e - 1
