"""Canonical labeling, isomorphism tests and point orbits.

The algorithm is the usual individualization-refinement search: refine
an ordered partition of the points until it is equitable, individualize
one point of the first smallest non-singleton cell, and recurse; the
canonical form is the lexicographically smallest adjacency encoding over
all discrete partitions reached.  Two standard prunes keep the highly
symmetric spaces in this library (minimal spheres, toroidal grids)
tractable:

* automorphisms discovered at equal-encoding leaves merge candidate
  points into orbits, and only one candidate per orbit is expanded;
* when a new automorphism is found, the search backjumps to the deepest
  node shared by the two leaf paths, because the rest of the current
  subtree is an automorphic image of an already explored one.

Encodings are plain bytes (point count plus adjacency rows under the
canonical order), so equal encodings mean isomorphic spaces and can be
used directly as memoization keys.

The generators collected during one search need not generate the full
automorphism group; orbits computed from them are sound (points in one
orbit really are interchangeable) which is all the callers rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .space import DigitalSpace


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical encoding plus the relabeling that produced it.

    relabeling[p] is the original point id placed at canonical position
    p; equal encodings therefore yield an explicit isomorphism.
    """

    encoding: bytes
    relabeling: tuple[str, ...]


# -- partition refinement -----------------------------------------------------


def _mask(cell: Sequence[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Refine until equitable: every point in a cell sees every cell equally."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        masks = [_mask(c) for c in cells]
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            by_key: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((rows[v] & m).bit_count() for m in masks)
                by_key.setdefault(key, []).append(v)
            if len(by_key) == 1:
                out.append(cell)
            else:
                changed = True
                for key in sorted(by_key):
                    out.append(by_key[key])
        cells = out
    return cells


def _encode_order(rows: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    """Adjacency rows after relabeling point order[p] to p."""
    position = {v: p for p, v in enumerate(order)}
    encoded = []
    for v in order:
        row = rows[v]
        new_row = 0
        while row:
            u = (row & -row).bit_length() - 1
            row &= row - 1
            new_row |= 1 << position[u]
        encoded.append(new_row)
    return tuple(encoded)


def _orbit_reps(n: int, generators: list[tuple[int, ...]], fixed: tuple[int, ...]):
    """Union-find over orbits of the generators that fix `fixed` pointwise."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        if all(gen[v] == v for v in fixed):
            for v in range(n):
                a, b = find(v), find(gen[v])
                if a != b:
                    parent[a] = b
    return find


# -- the search ---------------------------------------------------------------


class _Search:
    def __init__(self, rows: Sequence[int]):
        self.rows = tuple(rows)
        self.n = len(rows)
        self.best_encoding: tuple[int, ...] | None = None
        self.best_order: tuple[int, ...] | None = None
        self.best_path: tuple[int, ...] = ()
        self.generators: list[tuple[int, ...]] = []

    def run(self) -> None:
        if self.n == 0:
            return
        cells = _refine(self.rows, [list(range(self.n))])
        self._descend(cells, ())

    def _descend(self, cells: list[list[int]], path: tuple[int, ...]) -> int | None:
        """Explore one node; return a backjump depth or None."""
        target_index = -1
        target_size = 0
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (target_index < 0 or len(cell) < target_size):
                target_index = i
                target_size = len(cell)
        if target_index < 0:
            return self._leaf(cells, path)

        target = cells[target_index]
        tried: list[int] = []
        for v in target:
            if tried:
                find = _orbit_reps(self.n, self.generators, path)
                if any(find(v) == find(u) for u in tried):
                    continue
            child = (
                cells[:target_index]
                + [[v], [u for u in target if u != v]]
                + cells[target_index + 1 :]
            )
            result = self._descend(_refine(self.rows, child), path + (v,))
            tried.append(v)
            if result is not None:
                if result < len(path):
                    return result
                # backjump landed here: drop the rest of v's subtree, go on
        return None

    def _leaf(self, cells: list[list[int]], path: tuple[int, ...]) -> int | None:
        order = tuple(cell[0] for cell in cells)
        encoding = _encode_order(self.rows, order)
        if self.best_encoding is None or encoding < self.best_encoding:
            self.best_encoding = encoding
            self.best_order = order
            self.best_path = path
            return None
        if encoding == self.best_encoding:
            assert self.best_order is not None
            perm = [0] * self.n
            for p in range(self.n):
                perm[self.best_order[p]] = order[p]
            self.generators.append(tuple(perm))
            # deepest position where this path agrees with the best leaf's
            depth = 0
            limit = min(len(path), len(self.best_path))
            while depth < limit and path[depth] == self.best_path[depth]:
                depth += 1
            return depth
        return None


def _encoding_bytes(n: int, encoded_rows: tuple[int, ...]) -> bytes:
    width = (n + 7) // 8
    parts = [n.to_bytes(2, "big")]
    parts.extend(row.to_bytes(width, "big") for row in encoded_rows)
    return b"".join(parts)


def canonical_encoding_rows(rows: Sequence[int]) -> bytes:
    """Canonical encoding of a graph given as bitmask adjacency rows."""
    search = _Search(rows)
    search.run()
    if search.best_encoding is None:
        return _encoding_bytes(0, ())
    return _encoding_bytes(search.n, search.best_encoding)


# -- public API on spaces -------------------------------------------------------


def canonical_form(space: DigitalSpace) -> CanonicalForm:
    """Canonical form of a space; equal encodings mean isomorphic spaces."""
    cached = space._cache.get("canonical_form")
    if cached is not None:
        return cached
    search = _Search(space._rows)
    search.run()
    if search.best_order is None:
        form = CanonicalForm(_encoding_bytes(0, ()), ())
    else:
        relabeling = tuple(space.points[v] for v in search.best_order)
        form = CanonicalForm(
            _encoding_bytes(search.n, search.best_encoding), relabeling
        )
    space._cache["canonical_form"] = form
    space._cache.setdefault("generators", tuple(search.generators))
    return form


def _generators(space: DigitalSpace) -> tuple[tuple[int, ...], ...]:
    canonical_form(space)
    return space._cache["generators"]


def point_orbits(space: DigitalSpace) -> tuple[tuple[str, ...], ...]:
    """Groups of points interchangeable under discovered automorphisms.

    Orbits come from the generators found during the canonical search,
    which may generate a proper subgroup; the grouping is always sound,
    possibly finer than the true orbit partition.
    """
    cached = space._cache.get("point_orbits")
    if cached is not None:
        return cached
    n = len(space)
    find = _orbit_reps(n, list(_generators(space)), ())
    groups: dict[int, list[str]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(space.points[v])
    orbits = tuple(
        tuple(members) for _, members in sorted(groups.items(), key=lambda kv: kv[1][0])
    )
    space._cache["point_orbits"] = orbits
    return orbits


def are_isomorphic(left: DigitalSpace, right: DigitalSpace) -> bool:
    return canonical_form(left).encoding == canonical_form(right).encoding


def isomorphism(left: DigitalSpace, right: DigitalSpace) -> dict[str, str] | None:
    """An explicit isomorphism (point map) if the spaces are isomorphic."""
    a = canonical_form(left)
    b = canonical_form(right)
    if a.encoding != b.encoding:
        return None
    return {a.relabeling[p]: b.relabeling[p] for p in range(len(a.relabeling))}
