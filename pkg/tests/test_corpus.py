"""Built-in spaces: minimal spheres and disks, the torus, the projective plane."""

from __future__ import annotations

import pytest

import support
from digitop import (
    are_isomorphic,
    find_edge_disks,
    is_contractible,
    minimal_disk,
    minimal_sphere,
    projective_plane11,
    recognize_closed_manifold,
    recognize_disk,
    recognize_sphere,
    torus16,
)


def test_minimal_sphere_shape():
    for n in range(9):
        S = minimal_sphere(n)
        assert len(S) == 2 * n + 2
        assert S.edge_count == 2 * n * (n + 1)
        # every point is adjacent to all but its antipode
        for p in S.points:
            assert S.degree(p) == 2 * n


def test_minimal_sphere_range():
    with pytest.raises(ValueError):
        minimal_sphere(-1)
    with pytest.raises(ValueError):
        minimal_sphere(13)


def test_minimal_sphere_low_dimensions():
    assert minimal_sphere(0).edge_count == 0
    assert are_isomorphic(minimal_sphere(1), support.cycle(4))
    assert recognize_sphere(minimal_sphere(2)) == 2


def test_minimal_disk_shape():
    for n in range(5):
        D = minimal_disk(n)
        assert len(D) == 2 * n + 1
        assert is_contractible(D)
    d = recognize_disk(minimal_disk(2))
    assert d is not None and d.dimension == 2


def test_torus_battery():
    T = torus16()
    assert len(T) == 16
    assert T.edge_count == 48
    assert T.clique_vector().counts == (16, 48, 32)
    assert T.euler_characteristic() == 0
    assert recognize_closed_manifold(T) == 2
    assert recognize_sphere(T) is None
    assert find_edge_disks(T) == []
    for p in T.points:
        assert T.degree(p) == 6


def test_torus_rims_are_hexagons():
    T = torus16()
    for p in T.points:
        assert are_isomorphic(T.rim(p), support.cycle(6))


def test_projective_plane_battery():
    P = projective_plane11()
    assert len(P) == 11
    assert P.edge_count == 30
    assert P.clique_vector().counts == (11, 30, 20)
    assert P.euler_characteristic() == 1
    assert recognize_closed_manifold(P) == 2
    assert recognize_sphere(P) is None
    assert find_edge_disks(P) == []


def test_projective_plane_rims_are_cycles():
    P = projective_plane11()
    lengths = sorted(P.degree(p) for p in P.points)
    assert lengths == [4, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6]
    for p in P.points:
        rim = P.rim(p)
        assert recognize_sphere(rim) == 1
        assert rim.edge_count == len(rim)


def test_corpus_spaces_are_fresh_objects():
    a, b = torus16(), torus16()
    assert a == b and a is not b
