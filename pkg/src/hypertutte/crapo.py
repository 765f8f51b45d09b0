"""Manhattan distances to the hypertree set and Crapo intervals.

The Crapo interval of a hypertree h collects the lattice points that may
exceed h only in externally active coordinates and fall below h only in
internally active ones.  These intervals partition Z^E, and the covering
hypertree attains the one-sided distances d1< and d1> simultaneously;
verify_crapo_partition certifies both claims exhaustively on a box.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .model import RibbonGraph, emerald, node_index
from .hypertrees import enumerate_hypertrees
from .jaeger import embedding_activities, NotAHypertree


class EmptySet(ValueError):
    """Distance to an empty hypertree set is undefined."""


class BudgetExceeded(ValueError):
    """Verification box larger than the configured enumeration budget."""


_BOX_BUDGET = 4_000_000


def _as_set(h_or_set):
    if not h_or_set:
        raise EmptySet("empty hypertree set")
    if isinstance(h_or_set[0], (int,)):
        return (tuple(h_or_set),)
    return tuple(tuple(h) for h in h_or_set)


def d1_less(h_or_set, c) -> int:
    """min over the set of sum_e max(0, c(e) - h(e)): generalized nullity."""
    return min(
        sum(max(0, ci - hi) for ci, hi in zip(c, h)) for h in _as_set(h_or_set)
    )


def d1_greater(h_or_set, c) -> int:
    """min over the set of sum_e max(0, h(e) - c(e)): generalized corank."""
    return min(
        sum(max(0, hi - ci) for ci, hi in zip(c, h)) for h in _as_set(h_or_set)
    )


def d1(h_or_set, c) -> int:
    """Manhattan distance from c to the set."""
    return min(
        sum(abs(ci - hi) for ci, hi in zip(c, h)) for h in _as_set(h_or_set)
    )


@dataclass(frozen=True)
class CrapoInterval:
    """Lattice points assigned to ``center``; free sets are emerald names."""

    center: tuple
    internal_free: frozenset
    external_free: frozenset


def crapo_interval(g: RibbonGraph, h) -> CrapoInterval:
    record = embedding_activities(g, tuple(h))  # raises NotAHypertree
    return CrapoInterval(tuple(h), record.internal, record.external)


def interval_contains(interval: CrapoInterval, c) -> bool:
    for idx, (ci, hi) in enumerate(zip(c, interval.center)):
        e = emerald(idx)
        if ci > hi and e not in interval.external_free:
            return False
        if ci < hi and e not in interval.internal_free:
            return False
    return True


def default_box(g: RibbonGraph, margin: int = 2) -> list:
    hs = enumerate_hypertrees(g)
    return [
        (min(h[e] for h in hs) - margin, max(h[e] for h in hs) + margin)
        for e in range(g.emerald_count)
    ]


def _check_points(args):
    """Worker: check a chunk of lattice points; return violations + count."""
    intervals, hs, points = args
    violations = []
    for c in points:
        covering = [iv for iv in intervals if interval_contains(iv, c)]
        if len(covering) != 1:
            violations.append(
                {"point": list(c), "covered_by": [list(iv.center) for iv in covering]}
            )
            continue
        h = covering[0].center
        if (
            d1(hs, c) != d1(h, c)
            or d1_less(hs, c) != d1_less(h, c)
            or d1_greater(hs, c) != d1_greater(h, c)
        ):
            violations.append(
                {"point": list(c), "covered_by": [list(h)], "distance": "not attained"}
            )
    return len(points), violations


def verify_crapo_partition(g: RibbonGraph, box=None, jobs: int = 1) -> dict:
    """Exhaustively certify the Crapo partition and distance attainment.

    For every lattice point of the box: exactly one interval contains it,
    and that interval's center attains d1, d1< and d1> against the whole
    hypertree set.  Returns a PASS/FAIL report with all violations.
    """
    if box is None:
        box = default_box(g)
    size = 1
    for lo, hi in box:
        size *= hi - lo + 1
    if size > _BOX_BUDGET:
        raise BudgetExceeded(f"box of {size} points exceeds budget")
    hs = enumerate_hypertrees(g)
    intervals = [crapo_interval(g, h) for h in hs]
    points = list(itertools.product(*(range(lo, hi + 1) for lo, hi in box)))
    if jobs > 1:
        chunks = [points[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(_check_points, [(intervals, hs, ch) for ch in chunks])
            )
    else:
        results = [_check_points((intervals, hs, points))]
    checked = sum(n for n, _ in results)
    violations = [v for _, vs in results for v in vs]
    return {
        "kind": "crapo-partition",
        "status": "PASS" if not violations else "FAIL",
        "points": checked,
        "hypertrees": len(hs),
        "box": [[lo, hi] for lo, hi in box],
        "violations": violations,
    }
