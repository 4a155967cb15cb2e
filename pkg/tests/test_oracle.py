"""Independent brute-force patch oracle.

Re-derives circular patches with none of the library's geometric machinery:
a plain bounding-box scan over lattice shifts, direct distance tests, and a
coordinate-keyed census.  Agreement with the main pipeline is required
exactly, counts and classes alike.
"""

import math

import pytest

from conftest import get_tiling
from tilebalance.geometry import Disk, circumradius, patch, patch_census


def _poly(tiling, tile_id, m, n):
    t1, t2 = tiling.lattice.t1, tiling.lattice.t2
    base = tiling.tile_polygon(tile_id)
    return [(x + m * t1[0] + n * t2[0], y + m * t1[1] + n * t2[1]) for x, y in base]


def _seg_dist(p, a, b):
    ax, ay = a
    vx, vy = b[0] - ax, b[1] - ay
    L2 = vx * vx + vy * vy
    t = 0.0 if L2 == 0 else max(0.0, min(1.0, ((p[0] - ax) * vx + (p[1] - ay) * vy) / L2))
    return math.hypot(p[0] - (ax + t * vx), p[1] - (ay + t * vy))


def _inside(p, poly):
    for i, a in enumerate(poly):
        b = poly[(i + 1) % len(poly)]
        cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
        if cross < -1e-12:
            return False
    return True


def _min_dist(p, poly):
    if _inside(p, poly):
        return 0.0
    return min(_seg_dist(p, poly[i], poly[(i + 1) % len(poly)]) for i in range(len(poly)))


def _scan(tiling, center, radius):
    """All (tile, m, n) whose polygon's bounding box can touch the disk."""
    t1, t2 = tiling.lattice.t1, tiling.lattice.t2
    span = max(abs(t1[0]), abs(t1[1]), abs(t2[0]), abs(t2[1]))
    diam = 2.0 * circumradius(tiling)
    kmax = int(math.ceil((radius + diam) / span)) + 3
    out = []
    cx, cy = center
    for m in range(-kmax, kmax + 1):
        for n in range(-kmax, kmax + 1):
            for tid in range(len(tiling.tiles)):
                poly = _poly(tiling, tid, m, n)
                xs = [x for x, _ in poly]
                ys = [y for _, y in poly]
                if (min(xs) > cx + radius or max(xs) < cx - radius
                        or min(ys) > cy + radius or max(ys) < cy - radius):
                    continue
                out.append((tid, m, n, poly))
    return out


def _oracle_patch(tiling, center, radius):
    tol = 1e-9 * radius
    f1, f2 = [], []
    region = []
    for tid, m, n, poly in _scan(tiling, center, radius + 5 * circumradius(tiling)):
        dmax = max(math.dist(center, p) for p in poly)
        dmin = _min_dist(center, poly)
        if dmax <= radius + tol:
            f1.append((tid, m, n, poly))
        elif dmin <= radius + tol:
            f2.append((tid, m, n, poly))
        region.append((tid, m, n, poly, dmin))

    # pockets: region tiles cut off from the far field by F1 u F2
    u = circumradius(tiling)
    taken = {(t, m, n) for t, m, n, _ in f1} | {(t, m, n) for t, m, n, _ in f2}
    keyof = {}
    for tid, m, n, poly, dmin in region:
        for i, a in enumerate(poly):
            b = poly[(i + 1) % len(poly)]
            mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
            keyof.setdefault((round(mid[0], 6), round(mid[1], 6)), []).append((tid, m, n))
    neigh = {}
    for pair in keyof.values():
        for x in pair:
            for y in pair:
                if x != y:
                    neigh.setdefault(x, set()).add(y)
    seeds = [(t, m, n) for t, m, n, _p, dmin in region if dmin > radius + 2 * u]
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        cur = stack.pop()
        for nx in neigh.get(cur, ()):
            if nx not in seen and nx not in taken:
                seen.add(nx)
                stack.append(nx)
    f3 = [(t, m, n, p) for t, m, n, p, _d in region
          if (t, m, n) not in taken and (t, m, n) not in seen]
    return f1, f2, f3


def _oracle_census(tiles):
    verts = set()
    edges = set()
    for _t, _m, _n, poly in tiles:
        pts = [(round(x, 6), round(y, 6)) for x, y in poly]
        verts.update(pts)
        for i, a in enumerate(pts):
            b = pts[(i + 1) % len(pts)]
            edges.add((a, b) if a <= b else (b, a))
    return len(verts), len(edges), len(tiles)


@pytest.mark.parametrize("name", ["square", "regular-hexagon"])
@pytest.mark.parametrize("factor", [5, 10])
def test_oracle_matches_pipeline(name, factor):
    tiling = get_tiling(name)
    u = circumradius(tiling)
    cx = sum(x for x, _ in tiling.tile_polygon(0)) / len(tiling.tiles[0])
    cy = sum(y for _, y in tiling.tile_polygon(0)) / len(tiling.tiles[0])
    center = (cx, cy)
    r = factor * u

    p = patch(tiling, Disk(center, r))
    c = patch_census(p, tiling)

    f1, f2, f3 = _oracle_patch(tiling, center, r)
    assert {(m, n, t) for t, m, n, _ in f1} == {pt.key for pt in p.f1}
    assert {(m, n, t) for t, m, n, _ in f2} == {pt.key for pt in p.f2}
    assert {(m, n, t) for t, m, n, _ in f3} == {pt.key for pt in p.f3}

    v, e, t = _oracle_census(f1 + f2 + f3)
    assert (v, e, t) == (c.v, c.e, c.t)
    assert v - e + t == 1
