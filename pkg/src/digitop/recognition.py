"""Recognition of digital spheres, disks and manifolds.

Everything here is recursive over rims.  A digital n-sphere is two
isolated points when n = 0; for n > 0 it is a connected space in which
every rim is an (n-1)-sphere and every punctured space G - v is
contractible.  An n-disk is a sphere minus a point, a closed n-manifold
is a connected space whose rims are all (n-1)-spheres, and a manifold
with (spherical) boundary decomposes into interior points with sphere
rims and boundary points with disk rims.

Sphere recognition is memoized by canonical form.  Punctured-space
checks only need one representative per automorphism orbit, which is
what makes the highly symmetric minimal spheres cheap to certify.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .budget import Budget, ensure_budget
from .cache import MISSING, FormCache
from .canon import canonical_form, point_orbits
from .homotopy import is_contractible
from .space import DigitalSpace

_SPHERE = FormCache()


class SpaceKind(Enum):
    SPHERE = "sphere"
    DISK = "disk"
    CLOSED_MANIFOLD = "closed-manifold"
    MANIFOLD_WITH_BOUNDARY = "manifold-with-boundary"
    NONE = "none"


class DiskDecomposition(NamedTuple):
    dimension: int
    boundary: tuple[str, ...]
    interior: tuple[str, ...]


@dataclass(frozen=True)
class RecognitionResult:
    kind: SpaceKind
    dimension: int | None = None
    boundary: tuple[str, ...] | None = None
    interior: tuple[str, ...] | None = None


class NotAManifoldError(ValueError):
    """An operation that requires a closed manifold got something else."""


def recognize_sphere(G: DigitalSpace, budget: Budget | None = None) -> int | None:
    """Dimension n if G is a digital n-sphere, else None."""
    return _sphere(G, ensure_budget(budget))


def _sphere(G: DigitalSpace, budget: Budget) -> int | None:
    count = len(G)
    if count == 2 and G.edge_count == 0:
        return 0
    if count < 4:
        # no sphere besides S0 has fewer than four points
        return None
    key = canonical_form(G).encoding
    hit = _SPHERE.get(key)
    if hit is not MISSING:
        return hit
    budget.charge()
    result = None
    if G.is_connected():
        # dimension is fixed by the first point's rim, then verified globally
        first_dim = _sphere(G.rim(G.points[0]), budget)
        if first_dim is not None and all(
            _sphere(G.rim(v), budget) == first_dim for v in G.points[1:]
        ):
            representatives = [orbit[0] for orbit in point_orbits(G)]
            if all(
                is_contractible(G.delete_points([v]), budget)
                for v in representatives
            ):
                result = first_dim + 1
    _SPHERE.put(key, result)
    return result


def recognize_disk(
    G: DigitalSpace, budget: Budget | None = None
) -> DiskDecomposition | None:
    """(n, boundary, interior) if G is a digital n-disk, else None.

    Candidate interior points are those whose rim is a sphere; the final
    authority is the cone test: attaching a fresh apex adjacent to
    exactly the candidate boundary must produce an n-sphere, which is
    literally the definition of a disk read backwards.
    """
    budget = ensure_budget(budget)
    if len(G) == 1:
        return DiskDecomposition(0, (), (G.points[0],))
    if len(G) == 0:
        return None
    if not is_contractible(G, budget):
        return None
    boundary: list[str] = []
    interior: list[str] = []
    rim_dims = set()
    for v in G.points:
        dim = _sphere(G.rim(v), budget)
        if dim is None:
            boundary.append(v)
        else:
            interior.append(v)
            rim_dims.add(dim)
    if not interior or not boundary or len(rim_dims) != 1:
        return None
    n = rim_dims.pop() + 1
    boundary_space = G.induced_subspace(boundary)
    if _sphere(boundary_space, budget) != n - 1:
        return None
    apex = G.fresh_id("apex")
    if _sphere(G.add_point(apex, boundary), budget) != n:
        return None
    return DiskDecomposition(n, tuple(boundary), tuple(interior))


def recognize_closed_manifold(
    G: DigitalSpace, budget: Budget | None = None
) -> int | None:
    """Dimension n if every rim of connected G is an (n-1)-sphere.

    Covers the low-dimensional conventions: S0 is the closed 0-manifold
    and cycles of length >= 4 are the closed 1-manifolds.
    """
    budget = ensure_budget(budget)
    count = len(G)
    if count == 2 and G.edge_count == 0:
        return 0
    if count == 0 or not G.is_connected():
        return None
    dims = set()
    for v in G.points:
        dim = _sphere(G.rim(v), budget)
        if dim is None:
            return None
        dims.add(dim)
        if len(dims) > 1:
            return None
    return dims.pop() + 1


def recognize_manifold_with_boundary(
    G: DigitalSpace, budget: Budget | None = None
) -> DiskDecomposition | None:
    """(n, boundary, interior) for a manifold with spherical boundary.

    Interior rims must be (n-1)-spheres, boundary rims (n-1)-disks, the
    boundary must be nonempty and induce an (n-1)-sphere.
    """
    budget = ensure_budget(budget)
    if len(G) < 2 or not G.is_connected():
        return None
    boundary: list[str] = []
    interior: list[str] = []
    dims = set()
    for v in G.points:
        rim = G.rim(v)
        sphere_dim = _sphere(rim, budget)
        if sphere_dim is not None:
            interior.append(v)
            dims.add(sphere_dim + 1)
            continue
        disk = recognize_disk(rim, budget)
        if disk is not None:
            boundary.append(v)
            dims.add(disk.dimension + 1)
            continue
        return None
    if len(dims) != 1 or not boundary or not interior:
        return None
    n = dims.pop()
    if _sphere(G.induced_subspace(boundary), budget) != n - 1:
        return None
    return DiskDecomposition(n, tuple(boundary), tuple(interior))


def recognize(G: DigitalSpace, budget: Budget | None = None) -> RecognitionResult:
    """Most specific recognition: sphere, then disk, then the manifolds."""
    budget = ensure_budget(budget)
    dim = recognize_sphere(G, budget)
    if dim is not None:
        return RecognitionResult(SpaceKind.SPHERE, dim)
    disk = recognize_disk(G, budget)
    if disk is not None:
        return RecognitionResult(
            SpaceKind.DISK, disk.dimension, disk.boundary, disk.interior
        )
    dim = recognize_closed_manifold(G, budget)
    if dim is not None:
        return RecognitionResult(SpaceKind.CLOSED_MANIFOLD, dim)
    bounded = recognize_manifold_with_boundary(G, budget)
    if bounded is not None:
        return RecognitionResult(
            SpaceKind.MANIFOLD_WITH_BOUNDARY,
            bounded.dimension,
            bounded.boundary,
            bounded.interior,
        )
    return RecognitionResult(SpaceKind.NONE)


def require_closed_manifold(G: DigitalSpace, budget: Budget | None = None) -> int:
    """Dimension of G as a closed manifold, or NotAManifoldError."""
    dim = recognize_closed_manifold(G, budget)
    if dim is None:
        raise NotAManifoldError("space is not a closed manifold")
    return dim
