"""Contractibility and contractible transformations.

A point v of a space G is simple when its rim O(v) is contractible; an
edge (v, u) is simple when the joint rim O(vu) is contractible.  The
four contractible transformations (deleting and attaching simple points
and edges) preserve the Euler characteristic, and a space is
contractible when simple-point deletions alone can shrink it to a
single point.

is_contractible decides that by backtracking over simple-point
deletions, memoized on canonical forms, with sound prunes evaluated in
a fixed order:

  (a) one point: contractible
  (b) disconnected: not contractible
  (c) Euler characteristic != 1: not contractible
  (d) a point adjacent to all others: contractible (the space is a cone)
  (e) fewer than two simple points: not contractible
  (f) otherwise recurse on G - v for each simple point v

The prune (c) can be switched off, which matters only when comparing
against brute-force oracles in tests; verdicts are unaffected.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .budget import Budget, BudgetExceeded, ensure_budget
from .cache import MISSING, FormCache
from .canon import canonical_form
from .space import DigitalSpace

_CONTRACTIBLE = FormCache()

# When enabled, every transformation asserts that it preserved the
# Euler characteristic.  Costs a clique enumeration per step, so it is
# off by default and switched on by the test suite.
_debug_checks = False


def set_debug_checks(enabled: bool) -> None:
    global _debug_checks
    _debug_checks = enabled


def debug_checks_enabled() -> bool:
    return _debug_checks


class NotSimpleError(ValueError):
    """A transformation was asked to use a non-simple point or edge."""


class TraceError(ValueError):
    """A trace failed verification during replay."""


# -- contractibility ------------------------------------------------------------


def is_contractible(
    G: DigitalSpace,
    budget: Budget | None = None,
    *,
    chi_prune: bool = True,
    memo: bool = True,
) -> bool:
    """Decide whether G reduces to a point by simple-point deletions."""
    return _contractible(G, ensure_budget(budget), chi_prune, memo)


def _contractible(G: DigitalSpace, budget: Budget, chi_prune: bool, memo: bool) -> bool:
    n = len(G)
    if n == 0:
        return False
    if n == 1:
        return True
    if not G.is_connected():
        return False
    key = None
    if memo:
        key = canonical_form(G).encoding
        hit = _CONTRACTIBLE.get(key)
        if hit is not MISSING:
            return hit
    budget.charge()
    if chi_prune and G.euler_characteristic() != 1:
        result = False
    elif G.dominating_point() is not None:
        result = True
    else:
        simple = [
            v for v in G.points if _contractible(G.rim(v), budget, chi_prune, memo)
        ]
        if len(simple) < 2:
            result = False
        else:
            result = any(
                _contractible(G.delete_points([v]), budget, chi_prune, memo)
                for v in simple
            )
    if memo:
        _CONTRACTIBLE.put(key, result)
    return result


def is_simple_point(G: DigitalSpace, v: str, budget: Budget | None = None) -> bool:
    """True when the rim of v is contractible."""
    return is_contractible(G.rim(v), budget)


def is_simple_edge(G: DigitalSpace, v: str, u: str, budget: Budget | None = None) -> bool:
    """True when (v, u) is an edge and the joint rim is contractible."""
    if not G.adjacent(v, u):
        raise ValueError(f"no such edge: {v!r} -- {u!r}")
    return is_contractible(G.joint_rim(v, u), budget)


def simple_points(G: DigitalSpace, budget: Budget | None = None) -> tuple[str, ...]:
    budget = ensure_budget(budget)
    return tuple(v for v in G.points if is_simple_point(G, v, budget))


def simple_edges(G: DigitalSpace, budget: Budget | None = None) -> tuple[tuple[str, str], ...]:
    budget = ensure_budget(budget)
    return tuple(e for e in G.edges if is_simple_edge(G, e[0], e[1], budget))


# -- recorded transformation steps ------------------------------------------------


@dataclass(frozen=True)
class TransformStep:
    """One contractible transformation.

    kind is one of delete-point, attach-point, delete-edge, attach-edge.
    For point steps, rim holds the attachment rim (for a deletion, the
    rim observed at deletion time), which makes every step invertible.
    """

    kind: str
    points: tuple[str, ...]
    rim: tuple[str, ...] | None = None

    def inverted(self) -> "TransformStep":
        opposite = {
            "delete-point": "attach-point",
            "attach-point": "delete-point",
            "delete-edge": "attach-edge",
            "attach-edge": "delete-edge",
        }[self.kind]
        return TransformStep(opposite, self.points, self.rim)


@dataclass(frozen=True)
class TransformTrace:
    """A verified sequence of steps between two spaces.

    start and end are canonical encodings, so a trace can be checked
    against any relabeling of the spaces it was recorded on.
    """

    start: bytes
    steps: tuple[TransformStep, ...]
    end: bytes

    def inverted(self) -> "TransformTrace":
        return TransformTrace(
            self.end,
            tuple(step.inverted() for step in reversed(self.steps)),
            self.start,
        )


def _check_euler(before: DigitalSpace, after: DigitalSpace) -> None:
    if _debug_checks:
        a = before.euler_characteristic()
        b = after.euler_characteristic()
        assert a == b, f"transformation changed the Euler characteristic: {a} -> {b}"


def delete_simple_point(
    G: DigitalSpace, v: str, budget: Budget | None = None
) -> tuple[DigitalSpace, TransformStep]:
    rim = G.rim(v)
    if not is_contractible(rim, budget):
        raise NotSimpleError(f"point {v!r} is not simple")
    result = G.delete_points([v])
    _check_euler(G, result)
    return result, TransformStep("delete-point", (v,), rim.points)


def attach_simple_point(
    G: DigitalSpace,
    v: str,
    rim_points: tuple[str, ...] | list[str],
    budget: Budget | None = None,
) -> tuple[DigitalSpace, TransformStep]:
    rim_points = tuple(sorted(rim_points))
    if not is_contractible(G.induced_subspace(rim_points), budget):
        raise NotSimpleError(f"attachment rim for {v!r} is not contractible")
    result = G.add_point(v, rim_points)
    _check_euler(G, result)
    return result, TransformStep("attach-point", (v,), rim_points)


def delete_simple_edge(
    G: DigitalSpace, v: str, u: str, budget: Budget | None = None
) -> tuple[DigitalSpace, TransformStep]:
    if not G.adjacent(v, u):
        raise ValueError(f"no such edge: {v!r} -- {u!r}")
    if not is_contractible(G.joint_rim(v, u), budget):
        raise NotSimpleError(f"edge {v!r} -- {u!r} is not simple")
    result = G.remove_edge(v, u)
    _check_euler(G, result)
    return result, TransformStep("delete-edge", tuple(sorted((v, u))))


def attach_simple_edge(
    G: DigitalSpace, v: str, u: str, budget: Budget | None = None
) -> tuple[DigitalSpace, TransformStep]:
    if v == u or G.adjacent(v, u):
        raise ValueError(f"attach_simple_edge needs a non-adjacent pair: {v!r}, {u!r}")
    if not is_contractible(G.joint_rim(v, u), budget):
        raise NotSimpleError(f"common rim of {v!r}, {u!r} is not contractible")
    result = G.add_edge(v, u)
    _check_euler(G, result)
    return result, TransformStep("attach-edge", tuple(sorted((v, u))))


def apply_step(
    G: DigitalSpace, step: TransformStep, budget: Budget | None = None
) -> DigitalSpace:
    """Apply a recorded step, re-verifying that it is simple right now."""
    if step.kind == "delete-point":
        (v,) = step.points
        if step.rim is not None and tuple(sorted(G.neighbors(v))) != tuple(
            sorted(step.rim)
        ):
            raise TraceError(f"recorded rim of {v!r} does not match the space")
        return delete_simple_point(G, v, budget)[0]
    if step.kind == "attach-point":
        (v,) = step.points
        return attach_simple_point(G, v, step.rim or (), budget)[0]
    if step.kind == "delete-edge":
        v, u = step.points
        return delete_simple_edge(G, v, u, budget)[0]
    if step.kind == "attach-edge":
        v, u = step.points
        return attach_simple_edge(G, v, u, budget)[0]
    raise TraceError(f"unknown step kind: {step.kind!r}")


def replay(
    trace: TransformTrace, start: DigitalSpace, budget: Budget | None = None
) -> DigitalSpace:
    """Re-run a trace from a start space, verifying every step."""
    budget = ensure_budget(budget)
    if canonical_form(start).encoding != trace.start:
        raise TraceError("start space does not match the trace")
    current = start
    for step in trace.steps:
        try:
            current = apply_step(current, step, budget)
        except (NotSimpleError, ValueError) as exc:
            raise TraceError(f"step {step} failed: {exc}") from exc
    if canonical_form(current).encoding != trace.end:
        raise TraceError("end space does not match the trace")
    return current


def contractible_witness(
    G: DigitalSpace, budget: Budget | None = None
) -> TransformTrace:
    """A verified deletion sequence reducing G to one point.

    Raises ValueError when G is not contractible.
    """
    budget = ensure_budget(budget)
    if not is_contractible(G, budget):
        raise ValueError("space is not contractible")
    start = canonical_form(G).encoding
    steps = []
    current = G
    while len(current) > 1:
        for v in current.points:
            if is_simple_point(current, v, budget) and is_contractible(
                current.delete_points([v]), budget
            ):
                current, step = delete_simple_point(current, v, budget)
                steps.append(step)
                break
        else:  # pragma: no cover - contradicts contractibility
            raise AssertionError("no usable simple point in a contractible space")
    return TransformTrace(start, tuple(steps), canonical_form(current).encoding)


# -- reduction -------------------------------------------------------------------


class ReductionStrategy(Enum):
    """How reduce_space searches for a smaller homotopy-equivalent space."""

    DELETE_ONLY = "delete-only"
    ATTACH_EDGES = "attach-edges"


@dataclass(frozen=True)
class ReduceResult:
    space: DigitalSpace
    trace: TransformTrace
    exhausted: bool = False


def reduce_space(
    G: DigitalSpace,
    strategy: ReductionStrategy = ReductionStrategy.DELETE_ONLY,
    budget: Budget | None = None,
) -> ReduceResult:
    """Shrink G by contractible transformations; greedy and deterministic.

    DELETE_ONLY alternates exhaustive simple-point and simple-edge
    deletion sweeps (points and edges are scanned in id order).
    ATTACH_EDGES first attaches every simple edge it can (which may
    create new simple points), then deletes points, and repeats.
    Budget exhaustion stops the reduction and flags the result instead
    of raising, so the best space found so far is still returned.
    """
    budget = ensure_budget(budget)
    reducer = _Reducer(G, budget)
    exhausted = False
    try:
        if strategy is ReductionStrategy.DELETE_ONLY:
            reducer.delete_sweep()
        elif strategy is ReductionStrategy.ATTACH_EDGES:
            reducer.attach_then_delete()
        else:
            raise ValueError(f"unknown strategy: {strategy!r}")
    except BudgetExceeded:
        exhausted = True
    trace = TransformTrace(
        canonical_form(G).encoding,
        tuple(reducer.steps),
        canonical_form(reducer.current).encoding,
    )
    return ReduceResult(reducer.current, trace, exhausted)


class _Reducer:
    """Greedy reduction state; current and steps stay consistent even
    when a budget runs out in the middle of a sweep, because the space
    is only replaced after a transformation has fully succeeded."""

    def __init__(self, G: DigitalSpace, budget: Budget):
        self.current = G
        self.steps: list[TransformStep] = []
        self.budget = budget

    def delete_sweep(self) -> None:
        """Delete simple points, then simple edges, until neither applies."""
        while True:
            progressed = False
            while len(self.current) > 1:
                v = next(
                    (
                        p
                        for p in self.current.points
                        if is_simple_point(self.current, p, self.budget)
                    ),
                    None,
                )
                if v is None:
                    break
                self.current, step = delete_simple_point(self.current, v, self.budget)
                self.steps.append(step)
                progressed = True
            while True:
                edge = next(
                    (
                        e
                        for e in self.current.edges
                        if is_simple_edge(self.current, e[0], e[1], self.budget)
                    ),
                    None,
                )
                if edge is None:
                    break
                self.current, step = delete_simple_edge(
                    self.current, edge[0], edge[1], self.budget
                )
                self.steps.append(step)
                progressed = True
            if not progressed:
                return

    def attach_then_delete(self) -> None:
        while True:
            size_before = (len(self.current), self.current.edge_count)
            # attach until no non-adjacent pair has a contractible common rim
            attached = True
            while attached:
                attached = False
                points = self.current.points
                for i, v in enumerate(points):
                    for u in points[i + 1 :]:
                        if self.current.adjacent(v, u):
                            continue
                        if is_contractible(self.current.joint_rim(v, u), self.budget):
                            self.current, step = attach_simple_edge(
                                self.current, v, u, self.budget
                            )
                            self.steps.append(step)
                            attached = True
            self.delete_sweep()
            if (len(self.current), self.current.edge_count) == size_before:
                return


# -- homotopy comparison -----------------------------------------------------------


class DistinguishVerdict(Enum):
    DISTINCT = "distinct"
    NOT_DISTINGUISHED = "not-distinguished"


def homotopy_distinguish(G: DigitalSpace, H: DigitalSpace) -> DistinguishVerdict:
    """Separate two spaces by the Euler characteristic if possible.

    DISTINCT is definitive (the spaces cannot be homotopy equivalent);
    NOT_DISTINGUISHED is inconclusive, never a claim of equivalence.
    """
    if G.euler_characteristic() != H.euler_characteristic():
        return DistinguishVerdict.DISTINCT
    return DistinguishVerdict.NOT_DISTINGUISHED
