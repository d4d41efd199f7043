"""Built-in reference spaces.

minimal_sphere(n) is the join of n+1 copies of the two-point sphere;
minimal_disk(n) is that sphere minus its first point.  torus16 is the
triangulated 4x4 toroidal grid, the smallest edge-compressed digital
torus this library works with, and projective_plane11 is an 11-point
closed 2-manifold with Euler characteristic 1.

The projective plane adjacency was produced offline by building the
barycentric subdivision of the 6-vertex triangulated projective plane
(a verified 31-point digital 2-manifold with chi = 1) and contracting
edge-disks until no contraction applied; the resulting edge list is
frozen here and re-verified by the test suite (11 points, chi = 1,
closed 2-manifold, no edge-disks, not a sphere).
"""

from __future__ import annotations

from .space import DigitalSpace

MAX_MINIMAL_DIMENSION = 12


def minimal_sphere(n: int) -> DigitalSpace:
    """Join of n+1 copies of S0: 2n+2 points, all pairs adjacent except antipodes."""
    if not 0 <= n <= MAX_MINIMAL_DIMENSION:
        raise ValueError(f"dimension out of range: {n}")
    points = []
    for i in range(n + 1):
        points.append(f"p{i}a")
        points.append(f"p{i}b")
    edges = []
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if i // 2 != j // 2:
                edges.append((points[i], points[j]))
    return DigitalSpace(points, edges)


def minimal_disk(n: int) -> DigitalSpace:
    """minimal_sphere(n) minus its first point: 2n+1 points."""
    sphere = minimal_sphere(n)
    return sphere.delete_points([sphere.points[0]])


def torus16() -> DigitalSpace:
    """Triangulated 4x4 toroidal grid; every rim is a 6-cycle."""
    points = [f"t{i}{j}" for i in range(4) for j in range(4)]
    edges = set()
    for i in range(4):
        for j in range(4):
            here = f"t{i}{j}"
            for di, dj in ((1, 0), (0, 1), (1, 1)):
                there = f"t{(i + di) % 4}{(j + dj) % 4}"
                edges.add((min(here, there), max(here, there)))
    return DigitalSpace(points, sorted(edges))


# Frozen edge list, derived as described in the module docstring:
# 11 points, 30 edges, 20 triangles; every rim an induced cycle.
_PROJECTIVE_PLANE_11_EDGES: tuple[tuple[str, str], ...] = (
    ("a", "h"), ("a", "i"), ("a", "j"), ("a", "k"),
    ("b", "e"), ("b", "f"), ("b", "g"), ("b", "i"), ("b", "k"),
    ("c", "d"), ("c", "f"), ("c", "g"), ("c", "i"), ("c", "j"),
    ("d", "f"), ("d", "g"), ("d", "h"), ("d", "k"),
    ("e", "f"), ("e", "g"), ("e", "h"), ("e", "j"),
    ("f", "j"), ("f", "k"),
    ("g", "h"), ("g", "i"),
    ("h", "j"), ("h", "k"),
    ("i", "j"), ("i", "k"),
)


def projective_plane11() -> DigitalSpace:
    """11-point closed digital 2-manifold with chi = 1 (projective plane)."""
    points = [chr(ord("a") + i) for i in range(11)]
    return DigitalSpace(points, _PROJECTIVE_PLANE_11_EDGES)
