"""Digital topology on finite simple graphs.

Spaces are plain graphs; topology enters through rims (induced
neighbourhoods), contractibility, and recursively defined spheres,
disks and manifolds.  The package decides contractibility, recognizes
spheres/disks/manifolds, applies homotopy-preserving transformations,
compresses manifolds to their minimal edge-compressed form, and
enumerates small catalogs of compressed manifolds.
"""

from .budget import Budget, BudgetExceeded
from .canon import CanonicalForm, are_isomorphic, canonical_form, isomorphism, point_orbits
from .classify import (
    Catalog,
    CatalogEntry,
    CatalogMatch,
    ClassificationReport,
    MatchKind,
    catalog,
    classification_report,
    classify_against_catalog,
    complexity,
)
from .corpus import minimal_disk, minimal_sphere, projective_plane11, torus16
from .homotopy import (
    DistinguishVerdict,
    NotSimpleError,
    ReduceResult,
    ReductionStrategy,
    TraceError,
    TransformStep,
    TransformTrace,
    attach_simple_edge,
    attach_simple_point,
    contractible_witness,
    delete_simple_edge,
    delete_simple_point,
    homotopy_distinguish,
    is_contractible,
    is_simple_edge,
    is_simple_point,
    reduce_space,
    replay,
    set_debug_checks,
    simple_edges,
    simple_points,
)
from .recognition import (
    DiskDecomposition,
    NotAManifoldError,
    RecognitionResult,
    SpaceKind,
    recognize,
    recognize_closed_manifold,
    recognize_disk,
    recognize_manifold_with_boundary,
    recognize_sphere,
    require_closed_manifold,
)
from .space import CliqueVector, DigitalSpace, join
from .spacefile import SpaceFileError, export_dot, parse, serialize
from .transform import (
    CompressionCheck,
    CompressionResult,
    CompressionVerdict,
    ContractionStep,
    compress,
    connected_sum,
    contract_disk,
    find_edge_disks,
    is_compressed,
    r_transform,
)

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "BudgetExceeded",
    "CanonicalForm",
    "Catalog",
    "CatalogEntry",
    "CatalogMatch",
    "ClassificationReport",
    "CliqueVector",
    "CompressionCheck",
    "CompressionResult",
    "CompressionVerdict",
    "ContractionStep",
    "DigitalSpace",
    "DiskDecomposition",
    "DistinguishVerdict",
    "MatchKind",
    "NotAManifoldError",
    "NotSimpleError",
    "RecognitionResult",
    "ReduceResult",
    "ReductionStrategy",
    "SpaceFileError",
    "SpaceKind",
    "TraceError",
    "TransformStep",
    "TransformTrace",
    "are_isomorphic",
    "attach_simple_edge",
    "attach_simple_point",
    "canonical_form",
    "catalog",
    "classification_report",
    "classify_against_catalog",
    "complexity",
    "compress",
    "connected_sum",
    "contract_disk",
    "contractible_witness",
    "delete_simple_edge",
    "delete_simple_point",
    "export_dot",
    "find_edge_disks",
    "homotopy_distinguish",
    "is_compressed",
    "is_contractible",
    "is_simple_edge",
    "is_simple_point",
    "isomorphism",
    "join",
    "minimal_disk",
    "minimal_sphere",
    "parse",
    "point_orbits",
    "projective_plane11",
    "r_transform",
    "recognize",
    "recognize_closed_manifold",
    "recognize_disk",
    "recognize_manifold_with_boundary",
    "recognize_sphere",
    "reduce_space",
    "replay",
    "require_closed_manifold",
    "serialize",
    "set_debug_checks",
    "simple_edges",
    "simple_points",
    "torus16",
]
