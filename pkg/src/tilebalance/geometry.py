"""Planar embedding of periodic tilings and circular patch extraction.

A patch around a disk D(r, M) consists of F1 (tiles contained in the
closed disk), F2 (tiles meeting its boundary circle but not contained),
and F3 (tiles enclosed by the F2 ring).  All patch counts are integers
derived combinatorially from the quotient map; floating point is used
only for the containment tests, never for incidence resolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    EulerViolation,
    InscribedRadiusZero,
    OverlapDetected,
    RadiusTooSmall,
    RegionTooSmall,
)
from .periodic import PeriodicTiling, Shift, Vec2

DIST_TOL_SCALE = 1e-9


@dataclass(frozen=True)
class Disk:
    center: Vec2
    radius: float


@dataclass(frozen=True)
class PlacedTile:
    tile_id: int
    shift: Shift
    polygon: tuple[Vec2, ...]

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.shift[0], self.shift[1], self.tile_id)


@dataclass(frozen=True)
class Patch:
    disk: Disk
    f1: tuple[PlacedTile, ...]
    f2: tuple[PlacedTile, ...]
    f3: tuple[PlacedTile, ...]

    @property
    def all_tiles(self) -> tuple[PlacedTile, ...]:
        return tuple(sorted(self.f1 + self.f2 + self.f3, key=lambda p: p.key))


@dataclass(frozen=True)
class PatchCensus:
    v: int
    e: int
    t: int
    t_h: dict[int, int]
    v_j: dict[int, int]


@dataclass(frozen=True)
class BoundsReport:
    u: float
    U: float


# ---------------------------------------------------------------------------
# convex polygon primitives
# ---------------------------------------------------------------------------

def polygon_area(poly) -> float:
    s = 0.0
    for i, (x0, y0) in enumerate(poly):
        x1, y1 = poly[(i + 1) % len(poly)]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


def polygon_centroid(poly) -> Vec2:
    a = 0.0
    cx = cy = 0.0
    for i, (x0, y0) in enumerate(poly):
        x1, y1 = poly[(i + 1) % len(poly)]
        cross = x0 * y1 - x1 * y0
        a += cross
        cx += (x0 + x1) * cross
        cy += (y0 + y1) * cross
    a *= 0.5
    return (cx / (6 * a), cy / (6 * a))


def point_in_convex(p: Vec2, poly, tol: float = 1e-12) -> bool:
    for i, a in enumerate(poly):
        b = poly[(i + 1) % len(poly)]
        cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
        if cross < -tol:
            return False
    return True


def _segment_distance(p: Vec2, a: Vec2, b: Vec2) -> float:
    ax, ay = b[0] - a[0], b[1] - a[1]
    t = ((p[0] - a[0]) * ax + (p[1] - a[1]) * ay) / (ax * ax + ay * ay)
    t = min(1.0, max(0.0, t))
    return math.dist(p, (a[0] + t * ax, a[1] + t * ay))


def min_distance(p: Vec2, poly) -> float:
    """Distance from p to the polygon (0 when inside)."""
    if point_in_convex(p, poly):
        return 0.0
    return min(
        _segment_distance(p, poly[i], poly[(i + 1) % len(poly)])
        for i in range(len(poly))
    )


def max_distance(p: Vec2, poly) -> float:
    return max(math.dist(p, q) for q in poly)


def clip_convex(subject, clip):
    """Sutherland-Hodgman intersection of two convex polygons (both ccw)."""
    out = list(subject)
    for i in range(len(clip)):
        a, b = clip[i], clip[(i + 1) % len(clip)]
        ex, ey = b[0] - a[0], b[1] - a[1]
        inp, out = out, []
        if not inp:
            break

        def side(p):
            return ex * (p[1] - a[1]) - ey * (p[0] - a[0])

        for j, cur in enumerate(inp):
            prev = inp[j - 1]
            sc, sp = side(cur), side(prev)
            if sc >= 0:
                if sp < 0:
                    t = sp / (sp - sc)
                    out.append((prev[0] + t * (cur[0] - prev[0]),
                                prev[1] + t * (cur[1] - prev[1])))
                out.append(cur)
            elif sp >= 0:
                t = sp / (sp - sc)
                out.append((prev[0] + t * (cur[0] - prev[0]),
                            prev[1] + t * (cur[1] - prev[1])))
    return out


def min_enclosing_radius(points) -> float:
    """Smallest enclosing circle radius, brute force over support sets."""
    pts = list(points)
    best = None
    n = len(pts)

    def covers(c, r):
        rr = r + 1e-12 * max(r, 1.0)
        return all(math.dist(c, p) <= rr for p in pts)

    for i in range(n):
        for j in range(i + 1, n):
            c = ((pts[i][0] + pts[j][0]) / 2, (pts[i][1] + pts[j][1]) / 2)
            r = math.dist(pts[i], pts[j]) / 2
            if covers(c, r) and (best is None or r < best):
                best = r
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                a, b, c = pts[i], pts[j], pts[k]
                d = 2 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1])
                         + c[0] * (a[1] - b[1]))
                if abs(d) < 1e-14:
                    continue
                ux = ((a[0] ** 2 + a[1] ** 2) * (b[1] - c[1])
                      + (b[0] ** 2 + b[1] ** 2) * (c[1] - a[1])
                      + (c[0] ** 2 + c[1] ** 2) * (a[1] - b[1])) / d
                uy = ((a[0] ** 2 + a[1] ** 2) * (c[0] - b[0])
                      + (b[0] ** 2 + b[1] ** 2) * (a[0] - c[0])
                      + (c[0] ** 2 + c[1] ** 2) * (b[0] - a[0])) / d
                r = math.dist((ux, uy), a)
                if covers((ux, uy), r) and (best is None or r < best):
                    best = r
    if best is None:
        raise ValueError("need at least 2 points")
    return best


def inscribed_radius(poly) -> float:
    """Largest inscribed circle radius of a convex polygon.

    Binary search on r: erode the polygon by offsetting every side
    inward by r and test whether anything remains.
    """
    hi = min_enclosing_radius(poly)
    lo = 0.0

    sides = []
    for i, a in enumerate(poly):
        b = poly[(i + 1) % len(poly)]
        ex, ey = b[0] - a[0], b[1] - a[1]
        ln = math.hypot(ex, ey)
        # inward normal for a ccw polygon
        nx, ny = -ey / ln, ex / ln
        sides.append((a, b, nx, ny))

    def eroded_nonempty(r):
        region = list(poly)
        for a, b, nx, ny in sides:
            off = (nx * r, ny * r)
            ca = (a[0] + off[0], a[1] + off[1])
            cb = (b[0] + off[0], b[1] + off[1])
            ex, ey = cb[0] - ca[0], cb[1] - ca[1]
            region, inp = [], region
            for j, cur in enumerate(inp):
                prev = inp[j - 1]
                sc = ex * (cur[1] - ca[1]) - ey * (cur[0] - ca[0])
                sp = ex * (prev[1] - ca[1]) - ey * (prev[0] - ca[0])
                if sc >= 0:
                    if sp < 0:
                        t = sp / (sp - sc)
                        region.append((prev[0] + t * (cur[0] - prev[0]),
                                       prev[1] + t * (cur[1] - prev[1])))
                    region.append(cur)
                elif sp >= 0:
                    t = sp / (sp - sc)
                    region.append((prev[0] + t * (cur[0] - prev[0]),
                                   prev[1] + t * (cur[1] - prev[1])))
            if not region:
                return False
        return bool(region)

    for _ in range(64):
        mid = 0.5 * (lo + hi)
        if eroded_nonempty(mid):
            lo = mid
        else:
            hi = mid
    return lo


# ---------------------------------------------------------------------------
# embedding and bounds
# ---------------------------------------------------------------------------

def circumradius(tiling: PeriodicTiling) -> float:
    """U: every tile fits in a disk of this radius."""
    return max(
        min_enclosing_radius(tiling.tile_polygon(i))
        for i in range(len(tiling.tiles))
    )


def validate_geometry(tiling: PeriodicTiling) -> BoundsReport:
    """Uniform boundedness radii and a local overlap check."""
    U = circumradius(tiling)
    u = min(inscribed_radius(tiling.tile_polygon(i))
            for i in range(len(tiling.tiles)))
    if u <= 1e-12 * U:
        raise InscribedRadiusZero(f"inscribed radius {u!r} is degenerate")

    block = []
    for m in (-1, 0, 1):
        for n in (-1, 0, 1):
            for i in range(len(tiling.tiles)):
                block.append(tiling.tile_polygon(i, (m, n)))
    areas = [abs(polygon_area(p)) for p in block]
    boxes = [
        (min(x for x, _ in p), min(y for _, y in p),
         max(x for x, _ in p), max(y for _, y in p))
        for p in block
    ]
    for i in range(len(block)):
        for j in range(i + 1, len(block)):
            bi, bj = boxes[i], boxes[j]
            if bi[2] <= bj[0] or bj[2] <= bi[0] or bi[3] <= bj[1] or bj[3] <= bi[1]:
                continue
            inter = clip_convex(block[i], block[j])
            if len(inter) >= 3:
                a = abs(polygon_area(inter))
                if a > 1e-9 * min(areas[i], areas[j]):
                    raise OverlapDetected(
                        f"tiles overlap with area {a!r} in the 3x3 block"
                    )
    return BoundsReport(u=u, U=U)


def embed(tiling: PeriodicTiling, region: Disk) -> list[PlacedTile]:
    """Every lattice translate of every fundamental tile meeting the region.

    A zero radius is treated as a point query.  Positive radii below the
    tile circumradius U are rejected.
    """
    r = float(region.radius)
    U = circumradius(tiling)
    if 0.0 < r < U:
        raise RegionTooSmall(f"region radius {r} is below the tile bound {U}")
    cx, cy = region.center

    polys = [tiling.tile_polygon(i) for i in range(len(tiling.tiles))]
    reach = max(max_distance((0.0, 0.0), p) for p in polys)
    # lattice coefficient bounds for shifts whose tile could reach the disk
    corners = [
        (cx + sx * (r + reach), cy + sy * (r + reach))
        for sx in (-1, 1) for sy in (-1, 1)
    ]
    coeffs = [tiling.lattice.coefficients(p) for p in corners]
    m_lo = math.floor(min(a for a, _ in coeffs)) - 2
    m_hi = math.ceil(max(a for a, _ in coeffs)) + 2
    n_lo = math.floor(min(b for _, b in coeffs)) - 2
    n_hi = math.ceil(max(b for _, b in coeffs)) + 2

    tol = DIST_TOL_SCALE * max(r, 1.0)
    out = []
    for m in range(m_lo, m_hi + 1):
        for n in range(n_lo, n_hi + 1):
            dx, dy = tiling.lattice.displacement(m, n)
            center = (cx - dx, cy - dy)
            for i, poly in enumerate(polys):
                d = min_distance(center, poly)
                if (r == 0.0 and d <= tol) or (r > 0.0 and d <= r + tol):
                    moved = tuple((x + dx, y + dy) for x, y in poly)
                    out.append(PlacedTile(tile_id=i, shift=(m, n), polygon=moved))
    out.sort(key=lambda p: p.key)
    return out


def patch(tiling: PeriodicTiling, disk: Disk) -> Patch:
    """The patch A(r, M): F1, F2, and the hole tiles F3."""
    r = float(disk.radius)
    U = circumradius(tiling)
    if r < U * (1 - 1e-12):
        raise RadiusTooSmall(f"patch radius {r} is below the tile bound {U}")
    tol = DIST_TOL_SCALE * max(r, 1.0)

    region = embed(tiling, Disk(disk.center, r + 5 * U))
    f1, f2, pool = [], [], []
    for pt in region:
        dmin = min_distance(disk.center, pt.polygon)
        dmax = max_distance(disk.center, pt.polygon)
        if dmax <= r + tol:
            f1.append(pt)
        elif dmin <= r + tol:
            f2.append(pt)
        else:
            pool.append((pt, dmin))

    # flood outside-in: anything in the pool not reachable from the far
    # ring is enclosed by F2 and belongs to F3
    pool_keys = {pt.key: pt for pt, _ in pool}
    seeds = [pt.key for pt, dmin in pool if dmin > r + 2 * U]
    adjacency = tiling.adjacency
    stack = list(seeds)
    seen = set(seeds)
    while stack:
        m, n, i = stack.pop()
        for j, (dm, dn) in adjacency[i]:
            k = (m + dm, n + dn, j)
            if k in pool_keys and k not in seen:
                seen.add(k)
                stack.append(k)
    f3 = [pt for key, pt in sorted(pool_keys.items()) if key not in seen]

    if not f1:
        raise RadiusTooSmall(
            f"patch radius {r} leaves no tile fully inside the disk"
        )
    return Patch(
        disk=disk,
        f1=tuple(sorted(f1, key=lambda p: p.key)),
        f2=tuple(sorted(f2, key=lambda p: p.key)),
        f3=tuple(f3),
    )


def patch_census(p: Patch, tiling: PeriodicTiling) -> PatchCensus:
    """Integer census of the planar map formed by the patch tiles.

    Vertex and edge identities are resolved combinatorially through the
    quotient map, so coincident coordinates never need comparing.  Each
    tile's adjacent count h is its count in the host tiling.
    """
    verts = set()
    edges = set()
    t_h: dict[int, int] = {}
    for pt in p.all_tiles:
        m, n = pt.shift
        cycle = tiling.tiles[pt.tile_id]
        refs = [(ref.index, ref.m + m, ref.n + n) for ref in cycle]
        verts.update(refs)
        for i, a in enumerate(refs):
            b = refs[(i + 1) % len(refs)]
            edges.add((a, b) if a <= b else (b, a))
        h = len(tiling.adjacency[pt.tile_id])
        t_h[h] = t_h.get(h, 0) + 1

    v_j: dict[int, int] = {}
    for idx, _m, _n in verts:
        j = tiling.valence[idx]
        v_j[j] = v_j.get(j, 0) + 1

    v, e, t = len(verts), len(edges), len(p.all_tiles)
    if v - e + t != 1:
        raise EulerViolation(f"patch census {v} - {e} + {t} != 1")
    return PatchCensus(v=v, e=e, t=t,
                       t_h=dict(sorted(t_h.items())),
                       v_j=dict(sorted(v_j.items())))


def ratio_series(tiling: PeriodicTiling, center: Vec2, radii):
    """Empirical patch ratios (exact fractions of counts) per radius."""
    rs = [float(r) for r in radii]
    if any(b < a for a, b in zip(rs, rs[1:])):
        raise ValueError("radii must be non-decreasing")
    out = []
    for r in rs:
        c = patch_census(patch(tiling, Disk(center, r)), tiling)
        t = Fraction(c.t)
        out.append((
            r,
            Fraction(c.v) / t,
            Fraction(c.e) / t,
            {h: Fraction(k) / t for h, k in c.t_h.items()},
            {j: Fraction(k) / t for j, k in c.v_j.items()},
        ))
    return out
