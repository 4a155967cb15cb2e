"""Command line interface.

Subcommands expose the catalog, exact census statistics, circular patch
extraction, convergence studies, the full verification suite, the pentagon
reference-table regression, SVG rendering, and template file validation.

Reports are deterministic: fixed ordering, lengths printed with nine
fractional digits, exact statistics printed as ``p/q`` rationals.  Exit
codes: 0 success, 1 check failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from .analyzer import run_all_checks, table1_compare
from .catalog import ENV_CATALOG, load_template
from .errors import (
    CatalogError,
    GeometryError,
    InvalidTilingError,
    MissingCatalogEntry,
    TilebalanceError,
)
from .geometry import (
    Disk,
    circumradius,
    patch,
    patch_census,
    polygon_centroid,
    validate_geometry,
)
from .periodic import build_periodic_tiling, limit_stats
from .rational import format_rational
from .render import render_svg

_FORMATS = ("human", "json", "csv")


def _flen(x: float) -> str:
    s = f"{x:.9f}"
    return "0.000000000" if s == "-0.000000000" else s


class _UsageError(Exception):
    pass


def _load_tiling(source: str):
    template = load_template(source)
    return template, build_periodic_tiling(template)


def _parse_center(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise _UsageError(f"bad center {text!r}: expected X,Y")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise _UsageError(f"bad center {text!r}: {exc}") from None


def _parse_radius(text: str, unit: float) -> float:
    s = text.strip()
    try:
        if s.endswith(("U", "u")):
            return float(s[:-1]) * unit
        return float(s)
    except ValueError as exc:
        raise _UsageError(f"bad radius {text!r}: {exc}") from None


def _default_center(tiling) -> tuple[float, float]:
    # documented default: the centroid of fundamental tile 0
    return polygon_centroid(tiling.tile_polygon(0))


def _radii_from_spec(spec: str, unit: float) -> list[float]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise _UsageError(f"bad radii {spec!r}: expected R1:R2:STEP")
    r1 = _parse_radius(parts[0], unit)
    r2 = _parse_radius(parts[1], unit)
    step = _parse_radius(parts[2], unit)
    if step <= 0 or r2 < r1:
        raise _UsageError(f"bad radii {spec!r}: need R1 <= R2 and STEP > 0")
    out = []
    k = 0
    while True:
        r = r1 + k * step
        if r > r2 * (1 + 1e-12):
            break
        out.append(r)
        k += 1
    return out


# ---------------------------------------------------------------------------
# report emission
# ---------------------------------------------------------------------------

def _text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _emit_pairs(pairs, fmt: str, out) -> None:
    """A single record of (key, value) pairs."""
    if fmt == "human":
        width = max(len(k) for k, _ in pairs)
        for k, v in pairs:
            out.write(f"{k.ljust(width)} = {_text(v)}\n")
    elif fmt == "json":
        out.write(json.dumps(dict(pairs), indent=2) + "\n")
    else:
        w = csv.writer(out, lineterminator="\r\n")
        w.writerow(["field", "value"])
        for k, v in pairs:
            w.writerow([k, _text(v)])


def _emit_table(header, rows, fmt: str, out) -> None:
    """A homogeneous table of records."""
    if fmt == "human":
        cells = [header] + [[_text(c) for c in row] for row in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
        for r in cells:
            out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
    elif fmt == "json":
        out.write(json.dumps([dict(zip(header, row)) for row in rows], indent=2) + "\n")
    else:
        w = csv.writer(out, lineterminator="\r\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_text(c) for c in row])


def _stats_pairs(stats) -> list[tuple[str, object]]:
    pairs: list[tuple[str, object]] = [
        ("n", stats.n if stats.n is not None else "mixed"),
        ("edge_to_edge", stats.edge_to_edge),
        ("v", format_rational(stats.v)),
        ("e", format_rational(stats.e)),
        ("2e", format_rational(2 * stats.e)),
    ]
    for h, q in sorted(stats.t_h.items()):
        pairs.append((f"t_{h}", format_rational(q)))
    for j, q in sorted(stats.v_j.items()):
        pairs.append((f"v_{j}", format_rational(q)))
    for j, q in sorted(stats.w_j.items()):
        pairs.append((f"w_{j}", format_rational(q)))
    pairs.append(("avg_valence", format_rational(stats.avg_valence)))
    pairs.append(("sum_h_t_h", format_rational(stats.sum_h_t_h)))
    return pairs


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_list(args, out) -> int:
    from .catalog import list_catalog

    header = ["name", "label", "edge_to_edge", "tiles"]
    rows = [[name, label, e2e, count] for name, label, e2e, count in list_catalog()]
    _emit_table(header, rows, args.format, out)
    return 0


def _cmd_stats(args, out) -> int:
    _, tiling = _load_tiling(args.source)
    _emit_pairs(_stats_pairs(limit_stats(tiling)), args.format, out)
    return 0


def _cmd_patch(args, out) -> int:
    _, tiling = _load_tiling(args.source)
    unit = circumradius(tiling)
    r = _parse_radius(args.radius, unit)
    center = _parse_center(args.center) if args.center else _default_center(tiling)
    p = patch(tiling, Disk(center, r))
    c = patch_census(p, tiling)
    pairs: list[tuple[str, object]] = [
        ("radius", _flen(r)),
        ("center_x", _flen(center[0])),
        ("center_y", _flen(center[1])),
        ("f1", len(p.f1)),
        ("f2", len(p.f2)),
        ("f3", len(p.f3)),
        ("t", c.t),
        ("v", c.v),
        ("e", c.e),
        ("euler", c.v - c.e + c.t),
    ]
    for h, k in sorted(c.t_h.items()):
        pairs.append((f"t_{h}", k))
    for j, k in sorted(c.v_j.items()):
        pairs.append((f"v_{j}", k))
    _emit_pairs(pairs, args.format, out)
    return 0


def _cmd_converge(args, out) -> int:
    _, tiling = _load_tiling(args.source)
    unit = circumradius(tiling)
    radii = _radii_from_spec(args.radii, unit)
    center = _parse_center(args.center) if args.center else _default_center(tiling)
    stats = limit_stats(tiling)
    hs = sorted(stats.t_h)
    js = sorted(stats.v_j)

    header = (["radius", "t", "v", "e", "v_over_t", "e_over_t"]
              + [f"t_{h}_over_t" for h in hs] + [f"v_{j}_over_t" for j in js])
    rows = []
    for r in radii:
        c = patch_census(patch(tiling, Disk(center, r)), tiling)
        t = Fraction(c.t)
        row = [_flen(r), c.t, c.v, c.e,
               format_rational(Fraction(c.v) / t),
               format_rational(Fraction(c.e) / t)]
        row += [format_rational(Fraction(c.t_h.get(h, 0)) / t) for h in hs]
        row += [format_rational(Fraction(c.v_j.get(j, 0)) / t) for j in js]
        rows.append(row)
    limit_row = (["limit", "", "", "", format_rational(stats.v),
                  format_rational(stats.e)]
                 + [format_rational(stats.t_h[h]) for h in hs]
                 + [format_rational(stats.v_j[j]) for j in js])
    rows.append(limit_row)
    _emit_table(header, rows, args.format, out)

    if args.figure:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        xs = radii
        fig, ax = plt.subplots(figsize=(6, 4))
        vt = []
        et = []
        for r in radii:
            c = patch_census(patch(tiling, Disk(center, r)), tiling)
            vt.append(c.v / c.t)
            et.append(c.e / c.t)
        ax.plot(xs, vt, "o-", label="v/t")
        ax.plot(xs, et, "s-", label="e/t")
        ax.axhline(float(stats.v), color="C0", ls="--", lw=0.8)
        ax.axhline(float(stats.e), color="C1", ls="--", lw=0.8)
        ax.set_xlabel("patch radius")
        ax.set_ylabel("ratio")
        ax.legend()
        fig.tight_layout()
        fig.savefig(args.figure)
        plt.close(fig)
    return 0


def _cmd_verify(args, out) -> int:
    _, tiling = _load_tiling(args.source)
    results = run_all_checks(limit_stats(tiling))
    header = ["status", "check", "lhs", "rhs", "note"]
    rows = []
    failed = False
    for r in results:
        if not r.applicable:
            status = "SKIP"
        elif r.passed:
            status = "PASS"
        else:
            status = "FAIL"
            failed = True
        rows.append([status, r.check_id, r.lhs, r.rhs, r.note])
    _emit_table(header, rows, args.format, out)
    return 1 if failed else 0


def _cmd_table1(args, out) -> int:
    results = table1_compare()
    header = ["label", "match", "entry", "row", "note"]
    rows = []
    failed = False
    for label, r in results:
        if not r.passed:
            failed = True
        rows.append([label, r.passed, r.lhs, r.rhs, r.note])
    _emit_table(header, rows, args.format, out)
    return 1 if failed else 0


def _cmd_render(args, out) -> int:
    _, tiling = _load_tiling(args.source)
    disk = None
    if args.radius is not None:
        unit = circumradius(tiling)
        r = _parse_radius(args.radius, unit)
        center = (_parse_center(args.center) if args.center
                  else _default_center(tiling))
        disk = Disk(center, r)
    doc = render_svg(tiling, disk)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(doc)
    return 0


def _cmd_check(args, out) -> int:
    path = args.file
    if not os.path.exists(path):
        raise _UsageError(f"no such file: {path}")
    try:
        template = load_template(path)
        tiling = build_periodic_tiling(template)
        bounds = validate_geometry(tiling)
        stats = limit_stats(tiling)
    except (CatalogError, InvalidTilingError, GeometryError) as exc:
        out.write(f"invalid: {exc}\n")
        return 1
    pairs = [
        ("name", template.name),
        ("label", template.type_label),
        ("tiles", len(template.tiles)),
        ("edge_to_edge", stats.edge_to_edge),
        ("u", _flen(bounds.u)),
        ("U", _flen(bounds.U)),
        ("valid", True),
    ]
    _emit_pairs(pairs, args.format, out)
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tilebalance",
        description="Census statistics and balance identities for doubly "
                    "periodic tilings by convex polygons.",
        epilog=f"The {ENV_CATALOG} environment variable overrides the "
               "built-in catalog directory.  Radii ending in 'U' are "
               "multiples of the tiling's circumscribed-circle unit.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=_FORMATS, default="human")
        return p

    add("list", _cmd_list, help="list catalog tilings")

    p = add("stats", _cmd_stats, help="exact census statistics of a tiling")
    p.add_argument("source", help="catalog name or template file")

    p = add("patch", _cmd_patch, help="extract a circular patch census")
    p.add_argument("source")
    p.add_argument("--radius", required=True)
    p.add_argument("--center", default=None, help="X,Y (default: tile 0 centroid)")

    p = add("converge", _cmd_converge, help="empirical ratios over a radius sweep")
    p.add_argument("source")
    p.add_argument("--radii", required=True, metavar="R1:R2:STEP")
    p.add_argument("--center", default=None)
    p.add_argument("--figure", default=None, metavar="FILE",
                   help="also save a convergence plot")

    p = add("verify", _cmd_verify, help="run every balance identity check")
    p.add_argument("source")

    add("table1", _cmd_table1, help="compare pentagon entries to the reference table")

    p = add("render", _cmd_render, help="render the tiling (and a patch) as SVG")
    p.add_argument("source")
    p.add_argument("--radius", default=None)
    p.add_argument("--center", default=None)
    p.add_argument("-o", "--output", required=True, metavar="FILE.svg")

    p = add("check", _cmd_check, help="validate a template file")
    p.add_argument("file")
    return ap


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args, sys.stdout)
    except _UsageError as exc:
        print(f"tilebalance: {exc}", file=sys.stderr)
        return 2
    except MissingCatalogEntry as exc:
        # an incomplete catalog is a failed regression, not a usage mistake
        print(f"tilebalance: {exc}", file=sys.stderr)
        return 1
    except CatalogError as exc:
        print(f"tilebalance: {exc}", file=sys.stderr)
        return 2
    except (InvalidTilingError, GeometryError) as exc:
        print(f"tilebalance: {exc}", file=sys.stderr)
        return 1
    except TilebalanceError as exc:
        print(f"tilebalance: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
