"""Finite simple graphs with the vocabulary of digital topology.

A digital space is a finite simple undirected graph whose vertices are
called points.  The induced subgraph on the neighbours of a point v is
its rim O(v); the rim together with v is the ball U(v).  All topology in
this package (contractibility, spheres, manifolds) is defined in terms
of rims, balls and the join construction, so those are first-class
operations here.

DigitalSpace is immutable: every operation returns a new space.  Points
are identified by ids matching [A-Za-z0-9_]+ and kept sorted; adjacency
is stored as one integer bitmask row per point, which keeps the small
dense graphs this library targets fast without any third-party code.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .budget import Budget, ensure_budget

_ID_RE = re.compile(r"[A-Za-z0-9_]+\Z")

# Safety valve for clique enumeration; see DigitalSpace.clique_vector.
DEFAULT_CLIQUE_LIMIT = 10_000_000


def is_valid_point_id(point_id: object) -> bool:
    """True if point_id is a nonempty string over [A-Za-z0-9_]."""
    return isinstance(point_id, str) and bool(_ID_RE.match(point_id))


@dataclass(frozen=True)
class CliqueVector:
    """Clique counts of a space: counts[k] is the number of (k+1)-cliques."""

    counts: tuple[int, ...]

    @property
    def points(self) -> int:
        return self.counts[0] if self.counts else 0

    @property
    def edges(self) -> int:
        return self.counts[1] if len(self.counts) > 1 else 0

    @property
    def max_clique(self) -> int:
        return len(self.counts)

    def euler_characteristic(self) -> int:
        # Alternating sum over the clique complex: f0 - f1 + f2 - ...
        chi = 0
        for k, count in enumerate(self.counts):
            chi += count if k % 2 == 0 else -count
        return chi


class DigitalSpace:
    """An immutable finite simple graph with named points."""

    __slots__ = ("_ids", "_index", "_rows", "_cache")

    def __init__(
        self,
        points: Iterable[str] = (),
        edges: Iterable[tuple[str, str]] = (),
    ) -> None:
        ids: list[str] = []
        seen: set[str] = set()
        for pid in points:
            if not is_valid_point_id(pid):
                raise ValueError(f"invalid point id: {pid!r}")
            if pid in seen:
                raise ValueError(f"duplicate point id: {pid!r}")
            seen.add(pid)
            ids.append(pid)
        ids.sort()
        index = {pid: i for i, pid in enumerate(ids)}
        rows = [0] * len(ids)
        for p, q in edges:
            if p not in index:
                raise ValueError(f"edge endpoint is not a point: {p!r}")
            if q not in index:
                raise ValueError(f"edge endpoint is not a point: {q!r}")
            if p == q:
                raise ValueError(f"self-loop at {p!r}")
            i, j = index[p], index[q]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        self._ids = tuple(ids)
        self._index = index
        self._rows = tuple(rows)
        self._cache: dict = {}

    # -- construction helpers ------------------------------------------------

    @classmethod
    def _from_rows(cls, ids: Sequence[str], rows: Sequence[int]) -> "DigitalSpace":
        """Internal: build from presorted ids and bitmask rows, unchecked."""
        space = cls.__new__(cls)
        space._ids = tuple(ids)
        space._index = {pid: i for i, pid in enumerate(space._ids)}
        space._rows = tuple(rows)
        space._cache = {}
        return space

    # -- basic queries -------------------------------------------------------

    @property
    def points(self) -> tuple[str, ...]:
        return self._ids

    def __len__(self) -> int:
        return len(self._ids)

    def __iter__(self) -> Iterator[str]:
        return iter(self._ids)

    def __contains__(self, point_id: object) -> bool:
        return point_id in self._index

    def has_point(self, point_id: str) -> bool:
        return point_id in self._index

    def adjacent(self, p: str, q: str) -> bool:
        i = self._require(p)
        j = self._require(q)
        return bool(self._rows[i] >> j & 1)

    def neighbors(self, p: str) -> tuple[str, ...]:
        row = self._rows[self._require(p)]
        return self._ids_of(row)

    def degree(self, p: str) -> int:
        return self._rows[self._require(p)].bit_count()

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        out = []
        for i, row in enumerate(self._rows):
            # only the upper triangle, so each edge appears once
            high = row >> (i + 1) << (i + 1)
            while high:
                j = (high & -high).bit_length() - 1
                high &= high - 1
                out.append((self._ids[i], self._ids[j]))
        return tuple(out)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._rows) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DigitalSpace):
            return NotImplemented
        return self._ids == other._ids and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._ids, self._rows))

    def __repr__(self) -> str:
        return (
            f"DigitalSpace(points={len(self._ids)}, edges={self.edge_count})"
        )

    # -- internal bit plumbing ----------------------------------------------

    def _require(self, point_id: str) -> int:
        try:
            return self._index[point_id]
        except KeyError:
            raise ValueError(f"no such point: {point_id!r}") from None

    def _ids_of(self, mask: int) -> tuple[str, ...]:
        out = []
        while mask:
            i = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            out.append(self._ids[i])
        return tuple(out)

    def _mask_of(self, point_ids: Iterable[str]) -> int:
        mask = 0
        for pid in point_ids:
            mask |= 1 << self._require(pid)
        return mask

    def _induced_by_mask(self, mask: int) -> "DigitalSpace":
        kept = []
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            kept.append(i)
        ids = [self._ids[i] for i in kept]
        position = {i: k for k, i in enumerate(kept)}
        rows = []
        for i in kept:
            sub = self._rows[i] & mask
            new_row = 0
            while sub:
                j = (sub & -sub).bit_length() - 1
                sub &= sub - 1
                new_row |= 1 << position[j]
            rows.append(new_row)
        return DigitalSpace._from_rows(ids, rows)

    # -- subspaces and digital neighbourhoods ---------------------------------

    def induced_subspace(self, point_ids: Iterable[str]) -> "DigitalSpace":
        """Subspace induced by the given points (each must exist)."""
        return self._induced_by_mask(self._mask_of(point_ids))

    def delete_points(self, point_ids: Iterable[str]) -> "DigitalSpace":
        """Space with the given points (and incident edges) removed."""
        mask = self._mask_of(point_ids)
        full = (1 << len(self._ids)) - 1
        return self._induced_by_mask(full & ~mask)

    def rim(self, p: str) -> "DigitalSpace":
        """O(p): the subspace induced by the neighbours of p."""
        return self._induced_by_mask(self._rows[self._require(p)])

    def ball(self, p: str) -> "DigitalSpace":
        """U(p): the subspace induced by p together with its neighbours."""
        i = self._require(p)
        return self._induced_by_mask(self._rows[i] | (1 << i))

    def joint_rim(self, p: str, q: str) -> "DigitalSpace":
        """O(pq): the subspace induced by the common neighbours of p and q."""
        i = self._require(p)
        j = self._require(q)
        if i == j:
            raise ValueError(f"joint rim needs two distinct points: {p!r}")
        return self._induced_by_mask(self._rows[i] & self._rows[j])

    # -- edits (all return new spaces) ----------------------------------------

    def add_point(self, point_id: str, neighbors: Iterable[str] = ()) -> "DigitalSpace":
        if not is_valid_point_id(point_id):
            raise ValueError(f"invalid point id: {point_id!r}")
        if point_id in self._index:
            raise ValueError(f"point already present: {point_id!r}")
        nbr_mask = self._mask_of(neighbors)
        ids = sorted(self._ids + (point_id,))
        pos = ids.index(point_id)
        # remap old indices around the insertion position
        rows = []
        for i, row in enumerate(self._rows):
            low = row & ((1 << pos) - 1) if pos else 0
            high = (row >> pos) << (pos + 1)
            new_row = low | high
            if nbr_mask >> i & 1:
                new_row |= 1 << pos
            rows.append(new_row)
        new_row = 0
        m = nbr_mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            shifted = i if i < pos else i + 1
            new_row |= 1 << shifted
        rows.insert(pos, new_row)
        return DigitalSpace._from_rows(ids, rows)

    def add_edge(self, p: str, q: str) -> "DigitalSpace":
        i = self._require(p)
        j = self._require(q)
        if i == j:
            raise ValueError(f"self-loop at {p!r}")
        if self._rows[i] >> j & 1:
            raise ValueError(f"edge already present: {p!r} -- {q!r}")
        rows = list(self._rows)
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        return DigitalSpace._from_rows(self._ids, rows)

    def remove_edge(self, p: str, q: str) -> "DigitalSpace":
        i = self._require(p)
        j = self._require(q)
        if not (self._rows[i] >> j & 1):
            raise ValueError(f"no such edge: {p!r} -- {q!r}")
        rows = list(self._rows)
        rows[i] &= ~(1 << j)
        rows[j] &= ~(1 << i)
        return DigitalSpace._from_rows(self._ids, rows)

    def relabeled(self, mapping: dict[str, str]) -> "DigitalSpace":
        """Space with ids renamed by a total injective mapping."""
        new_ids = {}
        for pid in self._ids:
            if pid not in mapping:
                raise ValueError(f"mapping misses point {pid!r}")
            new_ids[pid] = mapping[pid]
        if len(set(new_ids.values())) != len(new_ids):
            raise ValueError("mapping is not injective")
        points = list(new_ids.values())
        edges = [(new_ids[p], new_ids[q]) for p, q in self.edges]
        return DigitalSpace(points, edges)

    def prefixed(self, prefix: str) -> "DigitalSpace":
        """Space with every id prefixed; handy before joins and sums."""
        return self.relabeled({pid: prefix + pid for pid in self._ids})

    def fresh_id(self, stem: str = "z") -> str:
        """Smallest stem<k> id not already used by this space."""
        k = 0
        while f"{stem}{k}" in self._index:
            k += 1
        return f"{stem}{k}"

    # -- global structure ------------------------------------------------------

    def is_connected(self) -> bool:
        """True for the empty and one-point spaces and for connected graphs."""
        n = len(self._ids)
        if n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            f = frontier
            while f:
                i = (f & -f).bit_length() - 1
                f &= f - 1
                reach |= self._rows[i]
            frontier = reach & ~seen
            seen |= reach
        return seen == (1 << n) - 1

    def connected_components(self) -> tuple[tuple[str, ...], ...]:
        n = len(self._ids)
        unvisited = (1 << n) - 1
        comps = []
        while unvisited:
            start = unvisited & -unvisited
            seen = start
            frontier = start
            while frontier:
                reach = 0
                f = frontier
                while f:
                    i = (f & -f).bit_length() - 1
                    f &= f - 1
                    reach |= self._rows[i]
                frontier = reach & ~seen
                seen |= reach
            comps.append(self._ids_of(seen))
            unvisited &= ~seen
        return tuple(comps)

    def dominating_point(self) -> str | None:
        """A point adjacent to every other point, if one exists."""
        n = len(self._ids)
        full = (1 << n) - 1
        for i, row in enumerate(self._rows):
            if row | (1 << i) == full:
                return self._ids[i]
        return None

    # -- clique complex ----------------------------------------------------------

    def clique_vector(
        self,
        max_size: int | None = None,
        max_cliques: int | None = DEFAULT_CLIQUE_LIMIT,
    ) -> CliqueVector:
        """Count cliques of every size (optionally capped).

        Enumerates cliques as increasing index sequences, so each clique
        is visited exactly once.  Exceeding max_cliques raises via the
        budget machinery; the cap exists because clique counts can grow
        exponentially in pathological inputs.
        """
        key = ("cliques", max_size)
        if max_size is None and "cliques" in self._cache:
            return self._cache["cliques"]
        if key in self._cache:
            return self._cache[key]
        rows = self._rows
        n = len(self._ids)
        counts: list[int] = []
        budget = Budget(max_cliques) if max_cliques is not None else Budget(None)

        def bump(size: int) -> None:
            while len(counts) < size:
                counts.append(0)
            counts[size - 1] += 1

        def extend(size: int, candidates: int) -> None:
            cand = candidates
            while cand:
                i = (cand & -cand).bit_length() - 1
                cand &= cand - 1
                budget.charge()
                bump(size + 1)
                if max_size is None or size + 1 < max_size:
                    extend(size + 1, cand & rows[i])

        if n:
            extend(0, (1 << n) - 1)
        vec = CliqueVector(tuple(counts))
        if max_size is None:
            self._cache["cliques"] = vec
        else:
            self._cache[key] = vec
        return vec

    def euler_characteristic(self) -> int:
        """Euler characteristic of the clique complex of this space."""
        if "euler" not in self._cache:
            self._cache["euler"] = self.clique_vector().euler_characteristic()
        return self._cache["euler"]


def join(left: DigitalSpace, right: DigitalSpace) -> DigitalSpace:
    """Join of two spaces: disjoint points, every cross pair adjacent.

    Point ids must not collide; use prefixed() to separate them first.
    """
    overlap = set(left.points) & set(right.points)
    if overlap:
        raise ValueError(f"join requires disjoint ids; shared: {sorted(overlap)}")
    points = list(left.points) + list(right.points)
    edges = list(left.edges) + list(right.edges)
    edges.extend((p, q) for p in left.points for q in right.points)
    return DigitalSpace(points, edges)
