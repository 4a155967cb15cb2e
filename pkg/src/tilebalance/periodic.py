"""Doubly periodic tilings as finite planar maps on the torus quotient.

A tiling is stored as one fundamental domain: a list of vertex orbit
representatives, a translation lattice, and tile boundary cycles whose
entries are (vertex index, lattice shift) references.  Identifying
vertices, edges, and tiles under lattice translation yields a finite map
on the torus, where V - E + F = 0 and all census ratios are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    AreaMismatch,
    DegenerateLattice,
    DisconnectedNeighborBoundary,
    FlatMarkMismatch,
    InvalidTilingError,
    LowValence,
    NonConvexTile,
    NonSimpleTile,
    UnmatchedEdge,
)

FLAT_ANGLE_TOL = 1e-9
LATTICE_EPS = 1e-12

Vec2 = tuple[float, float]
Shift = tuple[int, int]


class VertexRef(NamedTuple):
    """Reference to a vertex orbit: fundamental index plus lattice shift."""

    index: int
    m: int
    n: int

    @property
    def shift(self) -> Shift:
        return (self.m, self.n)

    def translated(self, dm: int, dn: int) -> "VertexRef":
        return VertexRef(self.index, self.m + dm, self.n + dn)


@dataclass(frozen=True)
class Lattice:
    """Translation lattice spanned by two independent vectors."""

    t1: Vec2
    t2: Vec2

    @property
    def det(self) -> float:
        return self.t1[0] * self.t2[1] - self.t1[1] * self.t2[0]

    def displacement(self, m: int, n: int) -> Vec2:
        return (
            m * self.t1[0] + n * self.t2[0],
            m * self.t1[1] + n * self.t2[1],
        )

    def coefficients(self, p: Vec2) -> tuple[float, float]:
        """Express a plane point in the (t1, t2) basis."""
        d = self.det
        a = (p[0] * self.t2[1] - p[1] * self.t2[0]) / d
        b = (self.t1[0] * p[1] - self.t1[1] * p[0]) / d
        return a, b


def _canonical_edge(a: VertexRef, b: VertexRef) -> tuple[tuple[VertexRef, VertexRef], Shift]:
    """Canonical representative of the edge orbit {a, b} modulo translation.

    Returns (key, sigma) where the actual segment equals the key translated
    by sigma.  Both endpoint-anchored normalizations are tried and the
    lexicographically smaller sorted pair wins, so any translate of the
    same unordered pair maps to the same key.
    """
    cands = []
    for anchor in (a, b):
        dm, dn = anchor.m, anchor.n
        pair = tuple(sorted((a.translated(-dm, -dn), b.translated(-dm, -dn))))
        cands.append((pair, (dm, dn)))
    return min(cands, key=lambda c: c[0])


@dataclass(frozen=True)
class QuotientCensus:
    """Integer counts per fundamental domain."""

    V: int
    E: int
    F: int
    T_h: dict[int, int]
    V_j: dict[int, int]


@dataclass(frozen=True)
class LimitStats:
    """Exact per-domain ratios; equal to the r -> infinity patch limits."""

    t_h: dict[int, Fraction]
    v_j: dict[int, Fraction]
    v: Fraction
    e: Fraction
    w_j: dict[int, Fraction]
    n: int | None
    edge_to_edge: bool

    @property
    def avg_valence(self) -> Fraction:
        """Sum of j * w_j, the mean vertex valence."""
        return sum((j * w for j, w in self.w_j.items()), Fraction(0))

    @property
    def sum_h_t_h(self) -> Fraction:
        return sum((h * t for h, t in self.t_h.items()), Fraction(0))


@dataclass(frozen=True)
class PeriodicTiling:
    """Validated fundamental-domain planar map; immutable after build."""

    name: str
    type_label: str
    lattice: Lattice
    vertices: tuple[Vec2, ...]
    tiles: tuple[tuple[VertexRef, ...], ...]
    flat: frozenset[tuple[int, int]]
    # derived at build time
    edges: tuple[tuple[VertexRef, VertexRef], ...]
    valence: tuple[int, ...]
    adjacency: tuple[tuple[tuple[int, Shift], ...], ...]
    tile_areas: tuple[float, ...]

    def point(self, ref: VertexRef) -> Vec2:
        base = self.vertices[ref.index]
        dx, dy = self.lattice.displacement(ref.m, ref.n)
        return (base[0] + dx, base[1] + dy)

    def tile_polygon(self, tile_id: int, shift: Shift = (0, 0)) -> tuple[Vec2, ...]:
        dm, dn = shift
        return tuple(self.point(r.translated(dm, dn)) for r in self.tiles[tile_id])

    def corner_count(self, tile_id: int) -> int:
        flats = sum(1 for (t, _p) in self.flat if t == tile_id)
        return len(self.tiles[tile_id]) - flats


def _shoelace(poly: list[Vec2]) -> float:
    s = 0.0
    for i, (x0, y0) in enumerate(poly):
        x1, y1 = poly[(i + 1) % len(poly)]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


def _segments_cross(p1: Vec2, p2: Vec2, q1: Vec2, q2: Vec2) -> bool:
    """Proper intersection test for open segments."""

    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)
    return ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0))


def _check_simple(poly: list[Vec2], tile_id: int) -> None:
    k = len(poly)
    if k < 3:
        raise NonSimpleTile(f"tile {tile_id}: fewer than 3 boundary vertices")
    for i in range(k):
        for j in range(i + 1, k):
            if math.dist(poly[i], poly[j]) < 1e-12:
                raise NonSimpleTile(f"tile {tile_id}: repeated boundary point at slots {i},{j}")
    for i in range(k):
        for j in range(i + 1, k):
            if j == i or (j + 1) % k == i or (i + 1) % k == j:
                continue
            if _segments_cross(poly[i], poly[(i + 1) % k], poly[j], poly[(j + 1) % k]):
                raise NonSimpleTile(f"tile {tile_id}: sides {i} and {j} cross")


def build_periodic_tiling(template) -> PeriodicTiling:
    """Validate a template and derive the quotient map.

    Performs every structural check: lattice nondegeneracy, simple convex
    tile boundaries (flat vertices allowed at angle pi), edge matching
    under lattice identification, valence >= 3, area sum against the
    lattice determinant, torus Euler characteristic, and connectedness of
    each shared boundary between neighboring tiles.
    """
    lattice = Lattice(tuple(map(float, template.lattice[0])), tuple(map(float, template.lattice[1])))
    if abs(lattice.det) <= LATTICE_EPS:
        raise DegenerateLattice(f"lattice determinant {lattice.det!r} is (near) zero")

    raw_vertices = [tuple(map(float, p)) for p in template.vertices]
    nverts = len(raw_vertices)
    raw_tiles = []
    for t_idx, cycle in enumerate(template.tiles):
        refs = []
        for entry in cycle:
            vi, m, n = entry
            if not (0 <= vi < nverts):
                raise InvalidTilingError(
                    f"tile {t_idx} references vertex index {vi} of {nverts}"
                )
            refs.append(VertexRef(int(vi), int(m), int(n)))
        raw_tiles.append(refs)

    # normalize orbit representatives into the half-open fundamental cell
    vertices = []
    vshift: list[Shift] = []
    for p in raw_vertices:
        a, b = lattice.coefficients(p)
        m0 = math.floor(a + 1e-9)
        n0 = math.floor(b + 1e-9)
        dx, dy = lattice.displacement(m0, n0)
        vertices.append((p[0] - dx, p[1] - dy))
        vshift.append((m0, n0))
    tiles = []
    for cycle in raw_tiles:
        tiles.append([r.translated(*vshift[r.index]) for r in cycle])

    # normalize orientation to counterclockwise, remapping flat marks
    def embed_cycle(cycle):
        pts = []
        for r in cycle:
            base = vertices[r.index]
            dx, dy = lattice.displacement(r.m, r.n)
            pts.append((base[0] + dx, base[1] + dy))
        return pts

    template_flat = set()
    for t, p in getattr(template, "flat", None) or []:
        template_flat.add((int(t), int(p)))
    flipped = []
    for t_idx, cycle in enumerate(tiles):
        area = _shoelace(embed_cycle(cycle))
        if abs(area) < 1e-15:
            raise NonSimpleTile(f"tile {t_idx}: degenerate (zero area)")
        if area < 0:
            tiles[t_idx] = list(reversed(cycle))
            flipped.append(t_idx)
    for t_idx in flipped:
        k = len(tiles[t_idx])
        template_flat = {
            (t, (k - 1 - p) if t == t_idx else p) for (t, p) in template_flat
        }

    # simplicity, convexity, and flat-vertex detection from interior angles
    detected_flat: set[tuple[int, int]] = set()
    tile_areas = []
    for t_idx, cycle in enumerate(tiles):
        poly = embed_cycle(cycle)
        _check_simple(poly, t_idx)
        tile_areas.append(_shoelace(poly))
        k = len(poly)
        for i in range(k):
            prev = poly[(i - 1) % k]
            cur = poly[i]
            nxt = poly[(i + 1) % k]
            u = (cur[0] - prev[0], cur[1] - prev[1])
            w = (nxt[0] - cur[0], nxt[1] - cur[1])
            turn = math.atan2(u[0] * w[1] - u[1] * w[0], u[0] * w[0] + u[1] * w[1])
            if abs(turn) <= FLAT_ANGLE_TOL:
                detected_flat.add((t_idx, i))
            elif turn < 0:
                raise NonConvexTile(
                    f"tile {t_idx}: interior angle above pi at boundary slot {i}"
                )
    if template_flat and template_flat != detected_flat:
        raise FlatMarkMismatch(
            f"template marks {sorted(template_flat)} but angles give {sorted(detected_flat)}"
        )
    flat = frozenset(detected_flat)

    # group directed boundary segments into edge orbits
    incidences: dict[tuple[VertexRef, VertexRef], list[tuple[int, int, Shift]]] = {}
    for t_idx, cycle in enumerate(tiles):
        k = len(cycle)
        for i in range(k):
            key, sigma = _canonical_edge(cycle[i], cycle[(i + 1) % k])
            incidences.setdefault(key, []).append((t_idx, i, sigma))
    for key, incs in incidences.items():
        if len(incs) != 2:
            raise UnmatchedEdge(
                f"edge {key} has {len(incs)} incident tile slots, expected 2"
            )

    # adjacency per tile: distinct (tile, relative shift) pairs across edges
    neighbor_edges: list[dict[tuple[int, Shift], list[tuple[VertexRef, VertexRef]]]] = [
        {} for _ in tiles
    ]
    for key, incs in incidences.items():
        (ta, _sa, siga), (tb, _sb, sigb) = incs
        for (t_here, sig_here), (t_there, sig_there) in (
            ((ta, siga), (tb, sigb)),
            ((tb, sigb), (ta, siga)),
        ):
            rel = (sig_there[0] - sig_here[0], sig_there[1] - sig_here[1])
            if t_there == t_here and rel == (0, 0):
                raise UnmatchedEdge(f"edge {key} is glued to itself within one tile copy")
            seg = (
                key[0].translated(-sig_here[0], -sig_here[1]),
                key[1].translated(-sig_here[0], -sig_here[1]),
            )
            neighbor_edges[t_here].setdefault((t_there, rel), []).append(seg)

    # normality: the shared boundary of each neighbor pair is one arc
    for t_idx, groups in enumerate(neighbor_edges):
        for (t_other, rel), segs in groups.items():
            if len(segs) < 2:
                continue
            parent: dict[VertexRef, VertexRef] = {}

            def find(x):
                while parent.setdefault(x, x) != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for a, b in segs:
                parent[find(a)] = find(b)
            roots = {find(a) for seg in segs for a in seg}
            if len(roots) > 1:
                raise DisconnectedNeighborBoundary(
                    f"tiles {t_idx} and {t_other}{rel} share a disconnected boundary"
                )

    adjacency = tuple(tuple(sorted(groups.keys())) for groups in neighbor_edges)

    # valence: one slot per incident tile corner or flat crossing
    valence = [0] * nverts
    for cycle in tiles:
        for r in cycle:
            valence[r.index] += 1
    for vi, val in enumerate(valence):
        if val < 3:
            raise LowValence(f"vertex {vi} has valence {val} < 3")

    # area conservation over the fundamental domain
    total = sum(tile_areas)
    target = abs(lattice.det)
    if abs(total - target) > 1e-9 * target:
        raise AreaMismatch(
            f"tile areas sum to {total!r}, fundamental domain has area {target!r}"
        )

    V = nverts
    E = len(incidences)
    F = len(tiles)
    if V - E + F != 0:
        raise InvalidTilingError(f"torus Euler characteristic {V}-{E}+{F} != 0")

    return PeriodicTiling(
        name=getattr(template, "name", ""),
        type_label=getattr(template, "type_label", ""),
        lattice=lattice,
        vertices=tuple(vertices),
        tiles=tuple(tuple(c) for c in tiles),
        flat=flat,
        edges=tuple(sorted(incidences.keys())),
        valence=tuple(valence),
        adjacency=adjacency,
        tile_areas=tuple(tile_areas),
    )


def quotient_counts(tiling: PeriodicTiling) -> QuotientCensus:
    """Integer census of the quotient map."""
    T_h: dict[int, int] = {}
    for nbrs in tiling.adjacency:
        h = len(nbrs)
        T_h[h] = T_h.get(h, 0) + 1
    V_j: dict[int, int] = {}
    for val in tiling.valence:
        V_j[val] = V_j.get(val, 0) + 1
    return QuotientCensus(
        V=len(tiling.vertices),
        E=len(tiling.edges),
        F=len(tiling.tiles),
        T_h=dict(sorted(T_h.items())),
        V_j=dict(sorted(V_j.items())),
    )


def adjacency_profile(tiling: PeriodicTiling) -> dict[int, int]:
    """Number of distinct edge-sharing tiles, per fundamental tile."""
    return {i: len(nbrs) for i, nbrs in enumerate(tiling.adjacency)}


def is_edge_to_edge(tiling: PeriodicTiling) -> bool:
    """True iff no tiling vertex lies flat on the side of any tile."""
    return not tiling.flat


def limit_stats(tiling: PeriodicTiling) -> LimitStats:
    """Exact limit statistics from the fundamental-domain census."""
    c = quotient_counts(tiling)
    F = Fraction(c.F)
    t_h = {h: Fraction(cnt) / F for h, cnt in c.T_h.items()}
    v_j = {j: Fraction(cnt) / F for j, cnt in c.V_j.items()}
    v = Fraction(c.V) / F
    e = Fraction(c.E) / F
    w_j = {j: q / v for j, q in v_j.items()}
    corner_counts = {tiling.corner_count(i) for i in range(len(tiling.tiles))}
    n = corner_counts.pop() if len(corner_counts) == 1 else None
    return LimitStats(
        t_h=t_h,
        v_j=v_j,
        v=v,
        e=e,
        w_j=w_j,
        n=n,
        edge_to_edge=is_edge_to_edge(tiling),
    )
