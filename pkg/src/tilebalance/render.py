"""SVG rendering of periodic tilings and circular patches.

The renderer emits standalone SVG 1.1 documents.  Every tile is drawn as a
closed path.  When a disk is supplied the three patch classes are
distinguishable through the CSS classes ``f1``, ``f2`` and ``f3`` so the
boundary behaviour of a patch can be inspected visually.

Output is deterministic: coordinates are formatted with nine fractional
digits and tiles are emitted in sorted key order.
"""

from __future__ import annotations

from .geometry import Disk, PlacedTile, circumradius, embed, patch
from .periodic import PeriodicTiling

_STYLE = (
    "path { stroke: #333333; stroke-width: %s; fill: #f5f1e6; }\n"
    "path.f1 { fill: #4e79a7; }\n"
    "path.f2 { fill: #f28e2b; }\n"
    "path.f3 { fill: #e15759; }\n"
    "circle.disk { stroke: #222222; stroke-width: %s; fill: none; }\n"
)


def _fmt(x: float) -> str:
    # avoid the "-0.000000000" artifact so output is reproducible across
    # platforms that differ in signed-zero handling
    s = f"{x:.9f}"
    return "0.000000000" if s == "-0.000000000" else s


def _path(poly, css_class: str | None) -> str:
    cmds = []
    for i, (x, y) in enumerate(poly):
        cmds.append(("M" if i == 0 else "L") + f" {_fmt(x)} {_fmt(-y)}")
    cmds.append("Z")
    d = " ".join(cmds)
    if css_class:
        return f'  <path class="{css_class}" d="{d}"/>'
    return f'  <path d="{d}"/>'


def _document(body: list[str], bounds, stroke: float) -> str:
    xmin, ymin, xmax, ymax = bounds
    pad = 0.05 * max(xmax - xmin, ymax - ymin, 1e-9)
    vb = (xmin - pad, ymin - pad, (xmax - xmin) + 2 * pad, (ymax - ymin) + 2 * pad)
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(vb[0])} {_fmt(vb[1])} {_fmt(vb[2])} {_fmt(vb[3])}">',
        "<style>",
        _STYLE % (_fmt(stroke), _fmt(stroke)),
        "</style>",
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def _bounds_of(polys):
    xs = [x for poly in polys for x, _ in poly]
    ys = [y for poly in polys for _, y in poly]
    return min(xs), min(ys), max(xs), max(ys)


def render_svg(tiling: PeriodicTiling, disk: Disk | None = None) -> str:
    """Render a tiling to an SVG 1.1 document string.

    Without a disk, one translate block of tiles (shifts in {-1, 0, 1}^2)
    is drawn.  With a disk, the patch A(r, M) is computed and the classes
    F1 (interior), F2 (boundary) and F3 (pocket) are colour coded; tiles of
    the surrounding embedding are drawn unclassed, and the disk itself is
    outlined.
    """
    stroke = 0.01 * circumradius(tiling)
    body: list[str] = []
    if disk is None:
        placed = [
            PlacedTile(t, (m, n), tiling.tile_polygon(t, (m, n)))
            for m in (-1, 0, 1)
            for n in (-1, 0, 1)
            for t in range(len(tiling.tiles))
        ]
        placed.sort(key=lambda pt: pt.key)
        polys = [pt.polygon for pt in placed]
        for pt in placed:
            body.append(_path(pt.polygon, None))
        # mirror the y axis: svg grows downwards
        xmin, ymin, xmax, ymax = _bounds_of(polys)
        return _document(body, (xmin, -ymax, xmax, -ymin), stroke)

    pat = patch(tiling, disk)
    classed = {}
    for pt in pat.f1:
        classed[pt.key] = (pt, "f1")
    for pt in pat.f2:
        classed[pt.key] = (pt, "f2")
    for pt in pat.f3:
        classed[pt.key] = (pt, "f3")
    u = circumradius(tiling)
    surround = embed(tiling, Disk(disk.center, disk.radius + 2.0 * u))
    polys = [pt.polygon for pt in surround] or [[disk.center]]
    for pt in surround:
        if pt.key not in classed:
            body.append(_path(pt.polygon, None))
    for key in sorted(classed):
        pt, cls = classed[key]
        body.append(_path(pt.polygon, cls))
    cx, cy = disk.center
    body.append(
        f'  <circle class="disk" cx="{_fmt(cx)}" cy="{_fmt(-cy)}" '
        f'r="{_fmt(disk.radius)}"/>'
    )
    xmin, ymin, xmax, ymax = _bounds_of(polys)
    xmin = min(xmin, cx - disk.radius)
    xmax = max(xmax, cx + disk.radius)
    ymin = min(ymin, cy - disk.radius)
    ymax = max(ymax, cy + disk.radius)
    return _document(body, (xmin, -ymax, xmax, -ymin), stroke)
