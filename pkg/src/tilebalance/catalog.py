"""Tiling template catalog: shipped JSON templates plus user files.

A template file is UTF-8 JSON with the schema

    {"name": str, "type_label": str,
     "lattice": [[ax, ay], [bx, by]],
     "vertices": [[x, y], ...],
     "tiles": [[[vi, m, n], ...], ...],
     "flat": [[tile, boundary_pos], ...],          (optional)
     "expected": {"t_h": {"5": "2/3", ...}, ...}}  (optional)

Rationals in "expected" are "p/q" strings, never floating point.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .errors import NotFoundError, ParseError, SchemaError
from .rational import format_rational, parse_rational

ENV_CATALOG = "TILEBALANCE_CATALOG"


@dataclass(frozen=True)
class ExpectedStats:
    """Reference limit statistics embedded in a template for regression."""

    t_h: dict[int, Fraction] = field(default_factory=dict)
    v_j: dict[int, Fraction] = field(default_factory=dict)
    v: Fraction | None = None
    e: Fraction | None = None
    w_j: dict[int, Fraction] = field(default_factory=dict)
    edge_to_edge: bool | None = None


@dataclass(frozen=True)
class TilingTemplate:
    name: str
    type_label: str
    lattice: tuple[tuple[float, float], tuple[float, float]]
    vertices: tuple[tuple[float, float], ...]
    tiles: tuple[tuple[tuple[int, int, int], ...], ...]
    flat: tuple[tuple[int, int], ...] = ()
    expected: ExpectedStats | None = None


def _require(obj: dict, key: str, typ, where: str):
    if key not in obj:
        raise SchemaError(f"{where}: missing required field {key!r}")
    val = obj[key]
    if typ is not None and not isinstance(val, typ):
        raise SchemaError(f"{where}: field {key!r} has wrong type {type(val).__name__}")
    return val


def _parse_vec2(item, where: str) -> tuple[float, float]:
    if (
        not isinstance(item, (list, tuple))
        or len(item) != 2
        or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in item)
    ):
        raise SchemaError(f"{where}: expected a pair of numbers, got {item!r}")
    return (float(item[0]), float(item[1]))


def _parse_rational_map(obj, where: str) -> dict[int, Fraction]:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    out = {}
    for k, v in obj.items():
        try:
            key = int(k)
            out[key] = parse_rational(v) if isinstance(v, str) else Fraction(int(v))
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise SchemaError(f"{where}: bad entry {k!r}: {v!r} ({exc})") from None
    return out


def _parse_expected(obj, where: str) -> ExpectedStats:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")

    def rat(key):
        if key not in obj:
            return None
        v = obj[key]
        try:
            return parse_rational(v) if isinstance(v, str) else Fraction(int(v))
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise SchemaError(f"{where}.{key}: {exc}") from None

    return ExpectedStats(
        t_h=_parse_rational_map(obj.get("t_h", {}), f"{where}.t_h"),
        v_j=_parse_rational_map(obj.get("v_j", {}), f"{where}.v_j"),
        v=rat("v"),
        e=rat("e"),
        w_j=_parse_rational_map(obj.get("w_j", {}), f"{where}.w_j"),
        edge_to_edge=obj.get("edge_to_edge"),
    )


def template_from_dict(data: dict, where: str = "template") -> TilingTemplate:
    name = _require(data, "name", str, where)
    type_label = _require(data, "type_label", str, where)
    lat = _require(data, "lattice", list, where)
    if len(lat) != 2:
        raise SchemaError(f"{where}: lattice needs exactly 2 vectors")
    lattice = (
        _parse_vec2(lat[0], f"{where}.lattice[0]"),
        _parse_vec2(lat[1], f"{where}.lattice[1]"),
    )
    verts_raw = _require(data, "vertices", list, where)
    vertices = tuple(
        _parse_vec2(p, f"{where}.vertices[{i}]") for i, p in enumerate(verts_raw)
    )
    tiles_raw = _require(data, "tiles", list, where)
    if not tiles_raw:
        raise SchemaError(f"{where}: at least one tile required")
    tiles = []
    for ti, cyc in enumerate(tiles_raw):
        if not isinstance(cyc, list) or len(cyc) < 3:
            raise SchemaError(f"{where}.tiles[{ti}]: boundary needs at least 3 refs")
        refs = []
        for ri, ref in enumerate(cyc):
            if (
                not isinstance(ref, list)
                or len(ref) != 3
                or not all(isinstance(c, int) and not isinstance(c, bool) for c in ref)
            ):
                raise SchemaError(
                    f"{where}.tiles[{ti}][{ri}]: expected [vertex, m, n] integers"
                )
            vi = ref[0]
            if not (0 <= vi < len(vertices)):
                raise SchemaError(
                    f"{where}.tiles[{ti}][{ri}]: vertex index {vi} out of range "
                    f"(have {len(vertices)})"
                )
            refs.append((ref[0], ref[1], ref[2]))
        tiles.append(tuple(refs))
    flat = []
    for fi, mark in enumerate(data.get("flat", []) or []):
        if (
            not isinstance(mark, list)
            or len(mark) != 2
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in mark)
        ):
            raise SchemaError(f"{where}.flat[{fi}]: expected [tile, boundary_pos]")
        t, p = mark
        if not (0 <= t < len(tiles)) or not (0 <= p < len(tiles[t])):
            raise SchemaError(f"{where}.flat[{fi}]: mark {mark} out of range")
        flat.append((t, p))
    expected = None
    if "expected" in data and data["expected"] is not None:
        expected = _parse_expected(data["expected"], f"{where}.expected")
    return TilingTemplate(
        name=name,
        type_label=type_label,
        lattice=lattice,
        vertices=vertices,
        tiles=tuple(tiles),
        flat=tuple(flat),
        expected=expected,
    )


def template_to_dict(t: TilingTemplate) -> dict:
    """Inverse of template_from_dict; round-trips losslessly."""
    data: dict = {
        "name": t.name,
        "type_label": t.type_label,
        "lattice": [list(t.lattice[0]), list(t.lattice[1])],
        "vertices": [list(p) for p in t.vertices],
        "tiles": [[list(r) for r in cyc] for cyc in t.tiles],
    }
    if t.flat:
        data["flat"] = [list(m) for m in t.flat]
    if t.expected is not None:
        exp: dict = {}
        if t.expected.t_h:
            exp["t_h"] = {str(k): format_rational(q) for k, q in t.expected.t_h.items()}
        if t.expected.v_j:
            exp["v_j"] = {str(k): format_rational(q) for k, q in t.expected.v_j.items()}
        if t.expected.v is not None:
            exp["v"] = format_rational(t.expected.v)
        if t.expected.e is not None:
            exp["e"] = format_rational(t.expected.e)
        if t.expected.w_j:
            exp["w_j"] = {str(k): format_rational(q) for k, q in t.expected.w_j.items()}
        if t.expected.edge_to_edge is not None:
            exp["edge_to_edge"] = t.expected.edge_to_edge
        data["expected"] = exp
    return data


def serialize_template(t: TilingTemplate) -> str:
    return json.dumps(template_to_dict(t), indent=2, sort_keys=False) + "\n"


def catalog_dir() -> Path:
    """Built-in data directory, or the TILEBALANCE_CATALOG override."""
    override = os.environ.get(ENV_CATALOG)
    if override:
        return Path(override)
    return Path(str(resources.files("tilebalance") / "data"))


def _load_file(path: Path) -> TilingTemplate:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise NotFoundError(f"cannot read {path}: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise SchemaError(f"{path}: top level must be an object")
    return template_from_dict(data, where=str(path))


def load_template(source: str | Path) -> TilingTemplate:
    """Load by catalog name or by file path.

    A source containing a path separator or ending in .json is treated as
    a file path; otherwise it is looked up in the catalog directory.
    """
    s = str(source)
    if os.sep in s or s.endswith(".json"):
        path = Path(s)
        if not path.exists():
            raise NotFoundError(f"no such template file: {path}")
        return _load_file(path)
    path = catalog_dir() / f"{s}.json"
    if not path.exists():
        known = ", ".join(name for name, *_ in list_catalog()) or "(none)"
        raise NotFoundError(f"no catalog template named {s!r}; available: {known}")
    return _load_file(path)


def list_catalog() -> list[tuple[str, str, bool, int]]:
    """(name, type_label, edge_to_edge, tiles_per_domain), sorted by name."""
    from .periodic import build_periodic_tiling, is_edge_to_edge

    out = []
    base = catalog_dir()
    if not base.is_dir():
        return out
    for path in sorted(base.glob("*.json")):
        t = _load_file(path)
        tiling = build_periodic_tiling(t)
        out.append((t.name, t.type_label, is_edge_to_edge(tiling), len(t.tiles)))
    out.sort(key=lambda row: row[0])
    return out
