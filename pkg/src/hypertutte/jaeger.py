"""Jaeger trees, hyperedge orders, and activity computations.

A (emerald) Jaeger tree is a spanning tree whose tour meets every
non-tree edge first at its emerald endpoint; each hypertree has exactly
one.  The violet variant uses the violet-endpoint-first rule.  Activities
of a hypertree are computed relative to a total order on the emerald
nodes; the tour of the Jaeger tree induces the order <_h, and the violet
tours induce two further orders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import RibbonGraph, is_emerald, is_violet, node_index
from .tours import tour
from .hypertrees import is_hypertree, representatives


class NotAHypertree(ValueError):
    """The given vector is not a hypertree of this ribbon graph."""


@dataclass(frozen=True)
class ActivityRecord:
    """Internal/external activity sets of one hypertree (emerald names)."""

    internal: frozenset
    external: frozenset

    @property
    def oi(self) -> int:
        return len(self.internal - self.external)

    @property
    def oe(self) -> int:
        return len(self.external - self.internal)

    @property
    def ie(self) -> int:
        return len(self.internal & self.external)


def _first_seen(g: RibbonGraph, tree: frozenset) -> dict:
    """First tour index of every (node, edge) pair."""
    first = {}
    for i, step in enumerate(tour(g, tree)):
        if step not in first:
            first[step] = i
    return first


def is_jaeger(g: RibbonGraph, tree: frozenset) -> bool:
    first = _first_seen(g, tree)
    for k, (v, e) in enumerate(g.edges):
        if k not in tree and first[(v, k)] < first[(e, k)]:
            return False
    return True


def is_violet_jaeger(g: RibbonGraph, tree: frozenset) -> bool:
    first = _first_seen(g, tree)
    for k, (v, e) in enumerate(g.edges):
        if k not in tree and first[(e, k)] < first[(v, k)]:
            return False
    return True


def _unique_tree(g, h, predicate, kind):
    reps = representatives(g, h)
    if not reps:
        raise NotAHypertree(f"{tuple(h)} is not a hypertree")
    found = [t for t in reps if predicate(g, t)]
    if len(found) != 1:
        raise AssertionError(
            f"expected exactly one {kind} tree for {tuple(h)}, got {len(found)}"
        )
    return found[0]


def jaeger_tree_of(g: RibbonGraph, h) -> frozenset:
    """The unique Jaeger tree representing h (filter + uniqueness assert)."""
    return _unique_tree(g, h, is_jaeger, "Jaeger")


def violet_jaeger_tree_of(g: RibbonGraph, h) -> frozenset:
    return _unique_tree(g, h, is_violet_jaeger, "violet Jaeger")


def _order_by_first_node(g: RibbonGraph, tree: frozenset) -> tuple:
    """Emerald nodes ranked by first occurrence as the current node."""
    seen = []
    for node, _ in tour(g, tree):
        if is_emerald(node) and node not in seen:
            seen.append(node)
    # the basis node may be emerald and is current from step 0 onwards;
    # emeralds never reached as current node would be missing, but the
    # tour visits every node of a spanning tree, so this is complete
    return tuple(seen)


def _order_by_first_endpoint(g: RibbonGraph, tree: frozenset) -> tuple:
    """Emerald nodes ranked by first occurrence as an endpoint of the
    current edge."""
    seen = []
    for _, k in tour(g, tree):
        e = g.edges[k][1]
        if e not in seen:
            seen.append(e)
    return tuple(seen)


def order_emerald(g: RibbonGraph, h) -> tuple:
    """The order <_h, read off the tour of the Jaeger tree of h."""
    return _order_by_first_node(g, jaeger_tree_of(g, h))


def order_violet(g: RibbonGraph, h) -> tuple:
    return _order_by_first_node(g, violet_jaeger_tree_of(g, h))


def order_violet_prime(g: RibbonGraph, h) -> tuple:
    return _order_by_first_endpoint(g, violet_jaeger_tree_of(g, h))


def activities(g: RibbonGraph, h, order) -> ActivityRecord:
    """Internal/external activities of h under a total emerald order.

    e is internal iff no earlier f makes h - 1_e + 1_f a hypertree, and
    external iff no earlier f makes h + 1_e - 1_f a hypertree.  The
    order minimum is always both.
    """
    h = tuple(h)
    internal, external = set(), set()
    for pos, e in enumerate(order):
        ei = node_index(e)
        earlier = order[:pos]
        if not any(_moved(h, ei, node_index(f), -1) and
                   is_hypertree(g, _moved(h, ei, node_index(f), -1))
                   for f in earlier):
            internal.add(e)
        if not any(_moved(h, ei, node_index(f), +1) and
                   is_hypertree(g, _moved(h, ei, node_index(f), +1))
                   for f in earlier):
            external.add(e)
    return ActivityRecord(frozenset(internal), frozenset(external))


def _moved(h, ei, fi, sign):
    """h + sign*(1_e - 1_f), or None if a coordinate would go negative."""
    out = list(h)
    out[ei] += sign
    out[fi] -= sign
    if out[ei] < 0 or out[fi] < 0:
        return None
    return tuple(out)


def embedding_activities(g: RibbonGraph, h) -> ActivityRecord:
    """Activities of h under its own tour order <_h."""
    return activities(g, h, order_emerald(g, h))
