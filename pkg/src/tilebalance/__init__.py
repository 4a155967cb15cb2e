"""tilebalance: census statistics and balance identities for doubly
periodic tilings by convex polygons."""

from .analyzer import (
    CheckResult,
    Table1Row,
    run_all_checks,
    table1_compare,
    table1_row_for,
)
from .catalog import TilingTemplate, list_catalog, load_template, serialize_template
from .errors import TilebalanceError
from .geometry import (
    Disk,
    Patch,
    PatchCensus,
    PlacedTile,
    circumradius,
    embed,
    inscribed_radius,
    patch,
    patch_census,
    ratio_series,
    validate_geometry,
)
from .render import render_svg
from .periodic import (
    Lattice,
    LimitStats,
    PeriodicTiling,
    QuotientCensus,
    VertexRef,
    adjacency_profile,
    build_periodic_tiling,
    is_edge_to_edge,
    limit_stats,
    quotient_counts,
)

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "Disk",
    "Lattice",
    "Patch",
    "PatchCensus",
    "PlacedTile",
    "Table1Row",
    "circumradius",
    "embed",
    "inscribed_radius",
    "patch",
    "patch_census",
    "ratio_series",
    "render_svg",
    "run_all_checks",
    "table1_compare",
    "table1_row_for",
    "validate_geometry",
    "LimitStats",
    "PeriodicTiling",
    "QuotientCensus",
    "TilingTemplate",
    "TilebalanceError",
    "VertexRef",
    "adjacency_profile",
    "build_periodic_tiling",
    "is_edge_to_edge",
    "limit_stats",
    "list_catalog",
    "load_template",
    "quotient_counts",
    "serialize_template",
    "__version__",
]
