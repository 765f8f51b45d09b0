"""Spanning trees and their tours.

A spanning tree is a frozenset of edge ids of a :class:`RibbonGraph`.  The
tour of a tree walks the ribbon structure starting at the basis pair: at a
non-tree edge it rotates to the next edge around the current node, at a
tree edge it crosses to the other endpoint and rotates there.  It stops
right before the basis pair would recur, having seen every edge twice.

Also here: the tree order defined by the first difference of two tours,
fundamental cycles and cuts, base components, and deterministic spanning
tree enumeration by contraction/deletion.
"""

from __future__ import annotations

from .model import RibbonGraph, is_emerald, is_violet


class WrongSide(ValueError):
    """Edge is on the wrong side of the tree for the requested operation."""


class EqualTrees(ValueError):
    """Raised by the tree comparison when both trees are identical."""


def is_spanning_tree(g: RibbonGraph, tree: frozenset) -> bool:
    nodes = g.nodes
    if len(tree) != len(nodes) - 1:
        return False
    seen = {nodes[0]}
    stack = [nodes[0]]
    adj = {n: [] for n in nodes}
    for k in tree:
        v, e = g.endpoints(k)
        adj[v].append(e)
        adj[e].append(v)
    while stack:
        n = stack.pop()
        for m in adj[n]:
            if m not in seen:
                seen.add(m)
                stack.append(m)
    return len(seen) == len(nodes)


def tour(g: RibbonGraph, tree: frozenset) -> list[tuple[str, int]]:
    """The tour of ``tree``: 2|edges| node-edge pairs starting at the basis."""
    b0, beta0 = g.basis
    node, edge = b0, beta0
    steps = []
    limit = 2 * len(g.edges)
    while True:
        steps.append((node, edge))
        if edge in tree:
            node = g.other_end(edge, node)
            edge = g.next_at(node, edge)
        else:
            edge = g.next_at(node, edge)
        if (node, edge) == (b0, beta0):
            break
        if len(steps) > limit:
            raise AssertionError("tour failed to close; not a spanning tree?")
    return steps


def first_difference(g: RibbonGraph, t1: frozenset, t2: frozenset):
    """Earliest tour step treated differently by the two trees, or None.

    Both tours produce the same step sequence up to the first pair whose
    edge lies in exactly one tree, so a single lockstep walk suffices.
    """
    b0, beta0 = g.basis
    node, edge = b0, beta0
    limit = 2 * len(g.edges)
    for _ in range(limit):
        in1 = edge in t1
        if in1 != (edge in t2):
            return (node, edge)
        if in1:
            node = g.other_end(edge, node)
            edge = g.next_at(node, edge)
        else:
            edge = g.next_at(node, edge)
        if (node, edge) == (b0, beta0):
            return None
    return None


def tree_less(g: RibbonGraph, t1: frozenset, t2: frozenset) -> bool:
    """Strict tree order: at the first tour difference (x, xy), t1 comes
    first iff x is emerald and xy in t2, or x is violet and xy in t1."""
    diff = first_difference(g, t1, t2)
    if diff is None:
        raise EqualTrees("tree_less requires distinct trees")
    x, xy = diff
    if is_emerald(x):
        return xy in t2
    return xy in t1


def tree_path(g: RibbonGraph, tree: frozenset, start: str, goal: str) -> list[int]:
    """Edge sequence of the unique tree path from start to goal."""
    parent = {start: (None, None)}
    stack = [start]
    while stack:
        n = stack.pop()
        if n == goal:
            break
        for k in g.incident(n):
            if k in tree:
                m = g.other_end(k, n)
                if m not in parent:
                    parent[m] = (n, k)
                    stack.append(m)
    path = []
    n = goal
    while n != start:
        n, k = parent[n]
        path.append(k)
    path.reverse()
    return path


def fundamental_cycle(g: RibbonGraph, tree: frozenset, edge: int) -> frozenset:
    """Edge set of the unique cycle of tree + edge (includes ``edge``)."""
    if edge in tree:
        raise WrongSide("fundamental_cycle expects a non-tree edge")
    v, e = g.endpoints(edge)
    return frozenset(tree_path(g, tree, v, e)) | {edge}


def _component(g: RibbonGraph, tree: frozenset, removed: int, root: str) -> frozenset:
    seen = {root}
    stack = [root]
    while stack:
        n = stack.pop()
        for k in g.incident(n):
            if k in tree and k != removed:
                m = g.other_end(k, n)
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
    return frozenset(seen)


def fundamental_cut(g: RibbonGraph, tree: frozenset, edge: int) -> frozenset:
    """Edges crossing the two components of tree - edge (includes ``edge``)."""
    if edge not in tree:
        raise WrongSide("fundamental_cut expects a tree edge")
    v, _ = g.endpoints(edge)
    shore = _component(g, tree, edge, v)
    return frozenset(
        k
        for k, (a, b) in enumerate(g.edges)
        if (a in shore) != (b in shore)
    )


def base_component(g: RibbonGraph, tree: frozenset, edge: int) -> frozenset:
    """Node set of the basis-side component of tree - edge."""
    if edge not in tree:
        raise WrongSide("base_component expects a tree edge")
    return _component(g, tree, edge, g.basis[0])


def enumerate_spanning_trees(g: RibbonGraph):
    """Yield every spanning tree exactly once, in a deterministic order.

    Contraction/deletion recursion pivoting on the lowest remaining edge
    id; the include (contract) branch is explored first.
    """
    edges = [(k, v, e) for k, (v, e) in enumerate(g.edges)]
    n = len(g.nodes)
    yield from _trees(edges, n, [])


def _connected(edges, n_nodes) -> bool:
    if n_nodes == 1:
        return True
    adj = {}
    for _, u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if len(adj) < n_nodes:
        return False
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n_nodes


def _trees(edges, n_nodes, chosen):
    if n_nodes == 1:
        yield frozenset(chosen)
        return
    pivot = min(edges)  # lowest edge id
    k, u, v = pivot
    rest = [t for t in edges if t[0] != k]
    # contract: relabel v to u, drop loops
    contracted = []
    for kk, a, b in rest:
        a2 = u if a == v else a
        b2 = u if b == v else b
        if a2 != b2:
            contracted.append((kk, a2, b2))
    chosen.append(k)
    yield from _trees(contracted, n_nodes - 1, chosen)
    chosen.pop()
    # delete: only if the graph stays connected
    if _connected(rest, n_nodes):
        yield from _trees(rest, n_nodes, chosen)
