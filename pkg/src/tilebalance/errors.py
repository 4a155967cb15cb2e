"""Exception hierarchy for tiling construction, geometry, and catalog I/O."""


class TilebalanceError(Exception):
    """Base class for all package errors."""


class InvalidTilingError(TilebalanceError):
    """A template failed structural validation."""


class DegenerateLattice(InvalidTilingError):
    """Lattice vectors are parallel or zero."""


class UnmatchedEdge(InvalidTilingError):
    """An edge orbit is not shared by exactly two tile slots."""


class LowValence(InvalidTilingError):
    """A tiling vertex has fewer than three incident tile slots."""


class NonSimpleTile(InvalidTilingError):
    """A tile boundary self-intersects or degenerates."""


class AreaMismatch(InvalidTilingError):
    """Tile areas do not sum to the fundamental-domain area."""


class NonConvexTile(InvalidTilingError):
    """A boundary vertex has interior angle above pi and is not flat."""


class FlatMarkMismatch(InvalidTilingError):
    """Template flat marks disagree with angle detection."""


class DisconnectedNeighborBoundary(InvalidTilingError):
    """Two adjacent tiles share a disconnected set of edges."""


class GeometryError(TilebalanceError):
    """Base class for planar-embedding errors."""


class RegionTooSmall(GeometryError):
    """Requested embed region is smaller than the tile circumradius."""


class RadiusTooSmall(GeometryError):
    """Patch radius below the 2U minimum."""


class EulerViolation(GeometryError):
    """A patch census failed v - e + t = 1; indicates an internal bug."""


class OverlapDetected(GeometryError):
    """Two placed tiles overlap with positive area."""


class InscribedRadiusZero(GeometryError):
    """A tile is too thin to contain any disk."""


class CatalogError(TilebalanceError):
    """Base class for template loading errors."""


class NotFoundError(CatalogError):
    """Named template does not exist in the catalog or on disk."""


class ParseError(CatalogError):
    """Template file is not valid JSON."""


class SchemaError(CatalogError):
    """Template JSON is well formed but violates the schema."""


class MissingCatalogEntry(CatalogError):
    """A required reference-table label has no catalog template."""
