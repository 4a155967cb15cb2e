"""Generate the shipped catalog templates from concrete geometry.

Each tiling is specified as a lattice plus the concrete corner polygons of
one fundamental domain.  compile_template infers the combinatorial
structure: vertex orbits modulo the lattice, integer shifts, and flat
vertices (corners of one tile lying interior to a side of another).  The
result is built with the engine and its exact statistics are compared
against the expected census row before the JSON file is written.

Run from the repository root:  python tools/gen_templates.py
"""

from __future__ import annotations

import itertools
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from tilebalance.catalog import template_from_dict
from tilebalance.periodic import Lattice, build_periodic_tiling, limit_stats

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "tilebalance" / "data"

S3 = math.sqrt(3.0)
TOL = 1e-7


def u(deg: float) -> tuple[float, float]:
    rad = math.radians(deg)
    return (math.cos(rad), math.sin(rad))


def add(p, q):
    return (p[0] + q[0], p[1] + q[1])


def sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def mul(s, p):
    return (s * p[0], s * p[1])


def rot(deg: float, p, center=(0.0, 0.0)):
    c, s = math.cos(math.radians(deg)), math.sin(math.radians(deg))
    x, y = p[0] - center[0], p[1] - center[1]
    return (center[0] + c * x - s * y, center[1] + s * x + c * y)


def half_turn(p, center):
    return (2 * center[0] - p[0], 2 * center[1] - p[1])


def turtle(start, sides, headings):
    """Polygon from side lengths and absolute headings in degrees."""
    pts = [start]
    for length, hdg in zip(sides[:-1], headings[:-1]):
        pts.append(add(pts[-1], mul(length, u(hdg))))
    # closure check with the last side
    end = add(pts[-1], mul(sides[-1], u(headings[-1])))
    if math.dist(end, start) > 1e-9:
        raise ValueError(f"turtle polygon fails to close: {end} vs {start}")
    return pts


# ---------------------------------------------------------------------------
# geometry -> combinatorial template
# ---------------------------------------------------------------------------

def compile_template(name, type_label, lattice, polys, expected=None):
    """Infer a combinatorial template from concrete tile polygons.

    polys: list of corner polygons (ccw) covering one fundamental domain.
    Flat vertices are found automatically: any orbit point lying interior
    to a side of a tile is inserted into that tile's boundary cycle.
    """
    lat = Lattice(tuple(lattice[0]), tuple(lattice[1]))
    reps: list[tuple[float, float]] = []

    def orbit_of(p):
        a, b = lat.coefficients(p)
        for idx, (ra, rb) in enumerate(rep_coeffs):
            dm, dn = a - ra, b - rb
            if abs(dm - round(dm)) < TOL and abs(dn - round(dn)) < TOL:
                return idx, int(round(dm)), int(round(dn))
        rep_coeffs.append((a, b))
        reps.append(p)
        return len(reps) - 1, 0, 0

    rep_coeffs: list[tuple[float, float]] = []
    corner_refs = []
    for poly in polys:
        corner_refs.append([orbit_of(p) for p in poly])

    def point_of(ref):
        idx, m, n = ref
        dx, dy = lat.displacement(m, n)
        return (reps[idx][0] + dx, reps[idx][1] + dy)

    # insert flat vertices: orbit points interior to a side
    tiles = []
    flats = []
    for poly, refs in zip(polys, corner_refs):
        cycle = []
        flat_pos = []
        k = len(poly)
        for i in range(k):
            p, q = poly[i], poly[(i + 1) % k]
            cycle.append(list(refs[i]))
            seg = sub(q, p)
            seglen2 = seg[0] ** 2 + seg[1] ** 2
            hits = []
            for ridx in range(len(reps)):
                # integer shifts bracketing the segment in lattice coords
                ca, cb = rep_coeffs[ridx]
                pa, pb = lat.coefficients(p)
                qa, qb = lat.coefficients(q)
                for m in range(math.floor(min(pa, qa) - ca) - 1, math.ceil(max(pa, qa) - ca) + 2):
                    for n in range(math.floor(min(pb, qb) - cb) - 1, math.ceil(max(pb, qb) - cb) + 2):
                        pt = point_of((ridx, m, n))
                        t = ((pt[0] - p[0]) * seg[0] + (pt[1] - p[1]) * seg[1]) / seglen2
                        if t < TOL or t > 1 - TOL:
                            continue
                        foot = add(p, mul(t, seg))
                        if math.dist(pt, foot) < TOL:
                            hits.append((t, (ridx, m, n)))
            for t, ref in sorted(hits):
                flat_pos.append(len(cycle))
                cycle.append(list(ref))
        tiles.append(cycle)
        flats.append(flat_pos)

    data = {
        "name": name,
        "type_label": type_label,
        "lattice": [list(lattice[0]), list(lattice[1])],
        "vertices": [list(p) for p in reps],
        "tiles": tiles,
    }
    flat_marks = [[ti, pos] for ti, fp in enumerate(flats) for pos in fp]
    if flat_marks:
        data["flat"] = flat_marks
    if expected is not None:
        data["expected"] = expected
    return data


def fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def row(t_h, v_j, edge_to_edge):
    t_h = {h: Fraction(x) for h, x in t_h.items()}
    v_j = {j: Fraction(x) for j, x in v_j.items()}
    v = sum(v_j.values(), Fraction(0))
    e = sum((Fraction(h) * t for h, t in t_h.items()), Fraction(0)) / 2
    w_j = {j: q / v for j, q in v_j.items()}
    return {
        "t_h": {str(h): fmt(x) for h, x in t_h.items()},
        "v_j": {str(j): fmt(x) for j, x in v_j.items()},
        "v": fmt(v),
        "e": fmt(e),
        "w_j": {str(j): fmt(x) for j, x in w_j.items()},
        "edge_to_edge": edge_to_edge,
    }


ROW_SQUARE = row({4: 1}, {4: 1}, True)
ROW_TRIANGLE = row({3: 1}, {6: Fraction(1, 2)}, True)
ROW_HEX = row({6: 1}, {3: 2}, True)
ROW_A = row({5: 1}, {3: 1, 4: Fraction(1, 2)}, True)                 # 1e, 2e, 4
ROW_B = row({5: 1}, {3: Fraction(4, 3), 6: Fraction(1, 6)}, True)    # 5
ROW_C = row({6: 1}, {3: 2}, False)                                   # 1, 2, 3, 12
ROW_D = row({5: Fraction(2, 3), 7: Fraction(1, 3)},
            {3: Fraction(5, 3), 4: Fraction(1, 6)}, False)           # 10
ROW_E = row({5: Fraction(1, 2), 7: Fraction(1, 2)}, {3: 2}, False)   # 11
ROW_F = row({5: Fraction(1, 2), 6: Fraction(1, 2)},
            {3: Fraction(3, 2), 4: Fraction(1, 4)}, False)           # 13
ROW_G = row({5: Fraction(1, 3), 6: Fraction(1, 3), 7: Fraction(1, 3)},
            {3: 2}, False)                                           # 14
ROW_H = row({5: Fraction(2, 3), 6: Fraction(1, 3)},
            {3: Fraction(4, 3), 4: Fraction(1, 3)}, False)           # 15


def verify(data):
    """Build with the engine and compare exact stats to the expected row."""
    template = template_from_dict(data)
    tiling = build_periodic_tiling(template)
    st = limit_stats(tiling)
    exp = data["expected"]
    got = {
        "t_h": {str(h): fmt(x) for h, x in st.t_h.items()},
        "v_j": {str(j): fmt(x) for j, x in st.v_j.items()},
        "v": fmt(st.v),
        "e": fmt(st.e),
        "w_j": {str(j): fmt(x) for j, x in st.w_j.items()},
        "edge_to_edge": st.edge_to_edge,
    }
    if got != exp:
        raise SystemExit(
            f"{data['name']}: stats mismatch\n  expected {exp}\n  got      {got}"
        )
    return tiling


def emit(data):
    tiling = verify(data)
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    path = DATA_DIR / f"{data['name']}.json"
    path.write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")
    print(f"ok  {data['name']:22s} F={len(data['tiles'])} "
          f"V={len(data['vertices'])} label={data['type_label']}")


# ---------------------------------------------------------------------------
# elementary tilings
# ---------------------------------------------------------------------------

def gen_square():
    emit(compile_template(
        "square", "square", [(1, 0), (0, 1)],
        [[(0, 0), (1, 0), (1, 1), (0, 1)]],
        ROW_SQUARE))


def gen_triangle():
    emit(compile_template(
        "triangle", "triangle", [(1, 0), (0, 1)],
        [[(0, 0), (1, 0), (1, 1)], [(0, 0), (1, 1), (0, 1)]],
        ROW_TRIANGLE))


def hexagon(center=(0.0, 0.0)):
    return [add(center, u(60 * k)) for k in range(6)]


def gen_regular_hexagon():
    emit(compile_template(
        "regular-hexagon", "regular", [(1.5, S3 / 2), (0, S3)],
        [hexagon()],
        ROW_HEX))


# ---------------------------------------------------------------------------
# hexagon types 1-3
# ---------------------------------------------------------------------------

def gen_hexagon_type_1():
    # parallelohexagon: A+B+C = 360 and a = d hold automatically
    poly = [(0, 0), (2, 0), (3, 1), (3, 2), (1, 2), (0, 1)]
    emit(compile_template(
        "hexagon-type-1", "hex1", [(3, 1), (1, 2)], [poly], ROW_HEX))


def gen_hexagon_type_2():
    # parallelohexagon satisfying A + B + D = 360, a = d, c = e
    p, q = 1.4, 1.0
    poly = turtle((0, 0), [p, q, q, p, q, q], [0, 20, 100, 180, 200, 280])
    t1 = sub(poly[2], poly[0])
    t2 = sub(poly[4], poly[0])
    emit(compile_template("hexagon-type-2", "hex2", [t1, t2], [poly], ROW_HEX))


def gen_hexagon_type_3():
    # three-fold tile: alternate angles 120 with equal flanking sides
    gamma, eps = S3 / 2, 0.5
    poly = turtle((0, 0), [1, gamma, gamma, eps, eps, 1],
                  [0, 90, 150, 180, 240, 300])
    tiles = [poly, [rot(120, p) for p in poly], [rot(240, p) for p in poly]]
    C, E = poly[2], poly[4]
    t1 = sub(C, rot(120, C))
    t2 = sub(E, rot(120, E))
    emit(compile_template("hexagon-type-3", "hex3", [t1, t2], tiles, ROW_HEX))


# ---------------------------------------------------------------------------
# pentagons via glued double hexagons (rows C and A)
# ---------------------------------------------------------------------------

def double_hexagon(name, label, penta, seam, expected):
    """Tile the plane with penta and its half turn glued along one side.

    seam: index i such that the glued side runs penta[i] -> penta[i+1];
    the two seam angles must sum to 180 degrees so the union is a
    centrally symmetric hexagon tiling by translation.
    """
    k = len(penta)
    mid = mul(0.5, add(penta[seam], penta[(seam + 1) % k]))
    mate = [half_turn(p, mid) for p in penta]
    hexa = [penta[(seam + 2) % k], penta[(seam + 3) % k], penta[(seam + 4) % k],
            mate[(seam + 2) % k], mate[(seam + 3) % k], mate[(seam + 4) % k]]
    t1 = sub(hexa[2], hexa[0])
    t2 = sub(hexa[4], hexa[0])
    return compile_template(name, label, [t1, t2], [penta, mate], expected)


def gen_pentagon_type_1():
    # A + B + C = 360 at three consecutive corners; seam corners 90 + 90
    penta = [(0, 0), (3, 0), (3, 1), (1, 2), (0, 2)]
    emit(double_hexagon("pentagon-type-1", "1", penta, 0, ROW_C))


def gen_pentagon_type_2():
    # B + D = 180 and c = e, with C + D = 180 enabling the seam glue
    import numpy as np

    A, B, C, D, E = 130, 100, 100, 80, 130
    headings = [0, 180 - B, 360 - B - C, 540 - B - C - D, 720 - B - C - D - E]
    h = [math.radians(x) for x in headings]
    # closure with b = c = e = 1 fixed; solve the 2x2 system for a, d
    M = np.array([[math.cos(h[0]), math.cos(h[3])],
                  [math.sin(h[0]), math.sin(h[3])]])
    rhs = -np.array([math.cos(h[1]) + math.cos(h[2]) + math.cos(h[4]),
                     math.sin(h[1]) + math.sin(h[2]) + math.sin(h[4])])
    a, d = np.linalg.solve(M, rhs)
    penta = turtle((0, 0), [a, 1.0, 1.0, d, 1.0], headings)
    emit(double_hexagon("pentagon-type-2", "2", penta, 2, ROW_C))


def gen_pentagon_type_12():
    # A=90, 2B+C=360, C+E=180, 2a=d=c+e; seam side c with C+D=180
    A, B, C, D, E = 90, 150, 60, 120, 120
    headings = [0, 180 - B, 360 - B - C, 540 - B - C - D, 720 - B - C - D - E]
    e = 1.0
    b = 3 * e
    a = 2 * S3 / (2 * S3 - 1) * e
    c = 2 * a - e
    d = 2 * a
    penta = turtle((0, 0), [a, b, c, d, e], headings)
    emit(double_hexagon("pentagon-type-12", "12", penta, 2, ROW_C))


# ---------------------------------------------------------------------------
# pentagons from cut hexagons (rows A, B, D, E, G)
# ---------------------------------------------------------------------------

HEX_T1 = (1.5, S3 / 2)
HEX_T2 = (0.0, S3)
# neighbor offsets across sides 0..5 of a unit hexagon
HEX_NBR = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]


def hex_center(i, j):
    return (i * HEX_T1[0] + j * HEX_T2[0], i * HEX_T1[1] + j * HEX_T2[1])


def cut_pieces(center, k):
    """Split a unit hexagon along the diameter joining the midpoints of
    sides k and k+3; returns two pentagons."""
    corner = [add(center, u(60 * t)) for t in range(7)]
    mid = [add(center, mul(S3 / 2, u(30 + 60 * t))) for t in range(6)]
    pa = [mid[k % 6], corner[(k + 1) % 6], corner[(k + 2) % 6],
          corner[(k + 3) % 6], mid[(k + 3) % 6]]
    pb = [mid[(k + 3) % 6], corner[(k + 4) % 6], corner[(k + 5) % 6],
          corner[k % 6], mid[k % 6]]
    return [pa, pb]


def gen_pentagon_type_1e():
    # regular hexagon cut through opposite side midpoints: edge-to-edge
    emit(compile_template(
        "pentagon-type-1e", "1e", [HEX_T1, HEX_T2],
        cut_pieces((0.0, 0.0), 1), ROW_A))


def gen_pentagon_type_2e():
    # non-regular parallelohexagon cut through opposite side midpoints,
    # shaped so the piece satisfies B + D = 180 with c = e.
    # One-parameter solve: angle gamma at the third corner must equal the
    # angle between the cut and the first half side.
    def piece(alpha, beta, p, q, r):
        gamma = 360 - alpha - beta
        hexa = turtle((0, 0), [p, q, r, p, q, r],
                      [0, 180 - beta, 360 - beta - gamma,
                       180, 360 - beta, 540 - beta - gamma])
        m0 = mul(0.5, add(hexa[0], hexa[1]))
        center = mul(0.5, add(hexa[0], hexa[3]))
        m3 = half_turn(m0, center)
        pa = [m0, hexa[1], hexa[2], hexa[3], m3]
        pb = [m3, hexa[4], hexa[5], hexa[0], m0]
        return hexa, pa, pb

    def mismatch(alpha):
        beta, p, q, r = 115.0, 2.0, 1.1, 1.0
        gamma = 360 - alpha - beta
        hexa, pa, pb = piece(alpha, beta, p, q, r)
        cut = sub(pa[4], pa[0])
        side = sub(pa[1], pa[0])
        ang = math.degrees(math.acos(
            (cut[0] * side[0] + cut[1] * side[1])
            / (math.hypot(*cut) * math.hypot(*side))))
        return ang - gamma

    # bracket a sign change, then bisect
    grid = [60 + 2 * i for i in range(60)]
    vals = [mismatch(x) for x in grid]
    lo = hi = None
    for x0, x1, f0, f1 in zip(grid, grid[1:], vals, vals[1:]):
        if (f0 > 0) != (f1 > 0):
            lo, hi, flo = x0, x1, f0
            break
    if lo is None:
        raise SystemExit("pentagon-type-2e: no bracket for the cut angle")
    for _ in range(200):
        midp = 0.5 * (lo + hi)
        fm = mismatch(midp)
        if (fm > 0) == (flo > 0):
            lo, flo = midp, fm
        else:
            hi = midp
    alpha = 0.5 * (lo + hi)
    hexa, pa, pb = piece(alpha, 115.0, 2.0, 1.1, 1.0)
    t1 = sub(hexa[2], hexa[0])
    t2 = sub(hexa[4], hexa[0])
    emit(compile_template("pentagon-type-2e", "2e", [t1, t2], [pa, pb], ROW_A))


def gen_pentagon_type_4():
    # Cairo-style: two right angles at alternate corners, equal side pairs;
    # four tiles whirl about a 90-degree corner
    s = S3 - 1
    A, B, C, D, E = 120, 120, 90, 120, 90
    headings = [0, 180 - B, 360 - B - C, 540 - B - C - D, 720 - B - C - D - E]
    penta = turtle((0, 0), [s, 1, 1, 1, 1], headings)
    anchor = penta[2]  # the right-angle corner C
    shifted = [sub(p, anchor) for p in penta]
    tiles = [[rot(90 * k, p) for p in shifted] for k in range(4)]
    emit(compile_template(
        "pentagon-type-4", "4", [(S3, S3), (S3, -S3)], tiles, ROW_A))


def gen_pentagon_type_5():
    # floret: petal pentagon with A = 60, six petals whirl about origin
    petal = [(0.0, 0.0), (2.0, 0.0), (2.5, S3 / 2), (2.0, S3), (1.0, S3)]
    tiles = [[rot(60 * k, p) for p in petal] for k in range(6)]
    emit(compile_template(
        "pentagon-type-5", "5", [(4.5, S3 / 2), (1.5, 2.5 * S3)], tiles, ROW_B))


def cut_family(name, label, cell, colors, expected):
    """Cut-hexagon tiling: honeycomb where hexagon (i, j) is cut along
    direction colors[i][j]; cell = (k, l, shear): the coloring repeats
    with periods k*t1 and shear*t1 + l*t2."""
    kk, ll, sh = cell
    tiles = []
    for i in range(kk):
        for j in range(ll):
            tiles.extend(cut_pieces(hex_center(i, j), colors[i][j]))
    lat = [mul(kk, HEX_T1), add(mul(sh, HEX_T1), mul(ll, HEX_T2))]
    return compile_template(name, label, lat, tiles, expected)


def search_cut_colorings(target, cells):
    """Find a periodic cut-direction assignment matching a census row.

    The census of a coloring is computed combinatorially first (piece
    adjacency counts and midpoint coincidences), and only matches are
    returned for engine verification.
    """
    t_target, v_target = target

    for kk, ll, sh in cells:
        n = kk * ll
        for flat_colors in itertools.product(range(3), repeat=n):
            col = {}
            for idx, c in enumerate(flat_colors):
                col[(idx // ll, idx % ll)] = c

            def color(i, j):
                q = j // ll
                j0 = j - ll * q
                return col[((i - sh * q) % kk, j0)]

            def nbr(i, j, d):
                di, dj = HEX_NBR[d % 6]
                return (i + di, j + dj)

            t_counts = {}
            ok = True
            for (i, j), c in col.items():
                for base in (0, 3):
                    # sibling + two half-side neighbors + one neighbor per
                    # full side, plus one more where the neighbor is cut
                    h = 5
                    for off in (1, 2):
                        d = (c + base + off) % 6
                        ni, nj = nbr(i, j, d)
                        if color(ni, nj) % 3 == d % 3:
                            h += 1
                    t_counts[h] = t_counts.get(h, 0) + 1
            t_frac = {h: Fraction(cnt, 2 * n) for h, cnt in t_counts.items()}
            if t_frac != t_target:
                continue
            cut_sides = 0
            doubles = 0
            for (i, j), c in col.items():
                for d in (0, 1, 2):
                    here = c % 3 == d % 3
                    ni, nj = nbr(i, j, d)
                    there = color(ni, nj) % 3 == d % 3
                    if here or there:
                        cut_sides += 1
                    if here and there:
                        doubles += 1
            V3 = 2 * n + cut_sides - doubles
            V4 = doubles
            v_frac = {}
            if V3:
                v_frac[3] = Fraction(V3, 2 * n)
            if V4:
                v_frac[4] = Fraction(V4, 2 * n)
            if v_frac != v_target:
                continue
            grid = [[col[(i, j)] for j in range(ll)] for i in range(kk)]
            yield (kk, ll, sh), grid


def parse_row(expected):
    t = {int(h): Fraction(x) for h, x in expected["t_h"].items()}
    v = {int(j): Fraction(x) for j, x in expected["v_j"].items()}
    return t, v


def gen_cut_search(name, label, expected, cells):
    for cell, grid in search_cut_colorings(parse_row(expected), cells):
        try:
            data = cut_family(name, label, cell, grid, expected)
            emit(data)
            print(f"    via cell {cell} colors {grid}")
            return
        except SystemExit as exc:
            print(f"    candidate {cell} {grid} rejected: {exc}")
            continue
    raise SystemExit(f"{name}: no cut coloring found in cells {cells}")


# ---------------------------------------------------------------------------
# pentagons from Y-split hexagons (rows C, F, H)
# ---------------------------------------------------------------------------

def y_pieces(center, parity):
    """Split a unit hexagon into three pentagons by arms from the center
    to the midpoints of alternating sides (parity 0: sides 0,2,4)."""
    corner = [add(center, u(60 * t)) for t in range(6)]
    mid = [add(center, mul(S3 / 2, u(30 + 60 * t))) for t in range(6)]
    out = []
    for arm in (parity, parity + 2, parity + 4):
        a0 = arm % 6
        a1 = (arm + 2) % 6
        out.append([center, mid[a0], corner[(a0 + 1) % 6],
                    corner[(a0 + 2) % 6], mid[a1]])
    return out


def y_family(name, label, cell, parities, expected):
    kk, ll = cell
    tiles = []
    for i in range(kk):
        for j in range(ll):
            tiles.extend(y_pieces(hex_center(i, j), parities[i][j]))
    lat = [mul(kk, HEX_T1), mul(ll, HEX_T2)]
    emit(compile_template(name, label, lat, tiles, expected))


def gen_pentagon_type_3():
    # A = C = D = 120, a = b, d = c + e: the hexagon third with two half
    # sides; uniform arm parity tiles in row "1, 2, 3, 12"
    y_family("pentagon-type-3", "3", (1, 1), [[0]], ROW_C)


def gen_pentagon_type_13():
    y_family("pentagon-type-13", "13", (2, 2), [[0, 0], [0, 1]], ROW_F)


def gen_pentagon_type_15():
    y_family("pentagon-type-15", "15", (1, 2), [[0, 1]], ROW_H)


def _cells(shapes):
    out = []
    for k, l in shapes:
        for s in range(k):
            out.append((k, l, s))
    return out


def offset_cut_pieces(center, k, sign, o):
    """Split a unit hexagon along the diameter through symmetric points on
    sides k and k+3, each displaced sign*o from the side midpoint.  The cut
    still passes through the centre, so the halves stay congruent, but the
    endpoints no longer sit at side midpoints: endpoints of neighbouring
    cuts on a shared side coincide (a 4-valent vertex) only when the signs
    oppose, and become T-points otherwise."""
    corner = [add(center, u(60 * t)) for t in range(7)]
    mid = [add(center, mul(S3 / 2, u(30 + 60 * t))) for t in range(6)]
    side_dir = [u(60 * t + 120) for t in range(6)]
    p1 = add(mid[k % 6], mul(sign * o, side_dir[k % 6]))
    p2 = add(mid[(k + 3) % 6], mul(sign * o, side_dir[(k + 3) % 6]))
    pa = [p1, corner[(k + 1) % 6], corner[(k + 2) % 6],
          corner[(k + 3) % 6], p2]
    pb = [p2, corner[(k + 4) % 6], corner[(k + 5) % 6],
          corner[k % 6], p1]
    return [pa, pb]


def gen_pentagon_type_10():
    # Midpoint cuts cannot reach row D (exhausted by search), but shifting
    # the cut endpoints o = 1/5 off the midpoints can: in a 3-hexagon cell
    # with cut classes (0, 1, 1) and signs (+, +, -) exactly one pair of
    # opposing endpoints meet (the 4-valent vertex) while the other four
    # endpoints land as T-points, giving row D exactly.
    tiles = []
    for j, (c, s) in enumerate([(0, 1), (1, 1), (1, -1)]):
        tiles.extend(offset_cut_pieces(hex_center(0, j), c, s, 0.2))
    lat = [HEX_T1, mul(3, HEX_T2)]
    emit(compile_template("pentagon-type-10", "10", lat, tiles, ROW_D))


def gen_pentagon_type_11():
    gen_cut_search("pentagon-type-11", "11", ROW_E,
                   _cells([(1, 2), (2, 1), (2, 2), (1, 3), (3, 1),
                           (2, 3), (3, 2), (3, 3), (4, 2), (2, 4)]))


def gen_pentagon_type_14():
    gen_cut_search("pentagon-type-14", "14", ROW_G,
                   _cells([(1, 3), (3, 1), (2, 3), (3, 2), (3, 3),
                           (6, 1), (1, 6), (6, 2), (2, 6), (4, 3), (3, 4)]))


def main():
    gens = [
        gen_square,
        gen_triangle,
        gen_regular_hexagon,
        gen_hexagon_type_1,
        gen_hexagon_type_2,
        gen_hexagon_type_3,
        gen_pentagon_type_1,
        gen_pentagon_type_1e,
        gen_pentagon_type_2,
        gen_pentagon_type_2e,
        gen_pentagon_type_3,
        gen_pentagon_type_4,
        gen_pentagon_type_5,
        gen_pentagon_type_10,
        gen_pentagon_type_11,
        gen_pentagon_type_12,
        gen_pentagon_type_13,
        gen_pentagon_type_14,
        gen_pentagon_type_15,
    ]
    only = set(sys.argv[1:])
    failed = []
    for g in gens:
        if only and not any(o in g.__name__ for o in only):
            continue
        try:
            g()
        except SystemExit as exc:
            print(f"FAIL {g.__name__}: {exc}")
            failed.append(g.__name__)
    if failed:
        raise SystemExit(f"failed: {failed}")


if __name__ == "__main__":
    main()
