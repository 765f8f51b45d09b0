"""Hypertrees: degree vectors of spanning trees at the emerald nodes.

A hypertree of a bipartite ribbon graph is a vector h over the emerald
nodes such that some spanning tree has degree h(e)+1 at every emerald
node e.  Hypertrees are stored as plain tuples indexed by emerald index.
The set of all hypertrees forms the bases of a polymatroid; the exchange
axiom is exposed via :func:`exchange_witness`.
"""

from __future__ import annotations

from functools import lru_cache

from .model import RibbonGraph, emerald, node_index, is_emerald
from . import tours


class NoWitness(RuntimeError):
    """No exchange witness exists; valid hypertree data never triggers this."""


def degree_vector(g: RibbonGraph, tree: frozenset) -> tuple:
    """h(e) = (tree degree of emerald node e) - 1, as a tuple."""
    degs = [0] * g.emerald_count
    for k in tree:
        _, e = g.endpoints(k)
        degs[node_index(e)] += 1
    return tuple(d - 1 for d in degs)


def find_tree_with_degrees(g: RibbonGraph, vector) -> frozenset | None:
    """A spanning tree with degree vector(e)+1 at each emerald node, or None.

    Backtracking over the edge list in index order, pruning on emerald
    degree caps, remaining-edge feasibility and cycle formation.
    """
    if len(vector) != g.emerald_count:
        return None
    if any(x < 0 for x in vector) or sum(vector) != g.violet_count - 1:
        return None
    target = [x + 1 for x in vector]
    m = len(g.edges)
    need_total = g.violet_count + g.emerald_count - 1

    # remaining incident edges per emerald among edges >= index k
    remaining = [[0] * g.emerald_count for _ in range(m + 1)]
    for k in range(m - 1, -1, -1):
        row = remaining[k + 1][:]
        row[node_index(g.edges[k][1])] += 1
        remaining[k] = row

    nodes = g.nodes
    node_pos = {n: i for i, n in enumerate(nodes)}
    parent = list(range(len(nodes)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    deg = [0] * g.emerald_count
    chosen = []

    def feasible(k):
        for j in range(g.emerald_count):
            if deg[j] + remaining[k][j] < target[j]:
                return False
        return True

    def rec(k):
        if len(chosen) == need_total:
            return deg == target
        if k == m or m - k < need_total - len(chosen) or not feasible(k):
            return False
        v, e = g.edges[k]
        j = node_index(e)
        ra, rb = find(node_pos[v]), find(node_pos[e])
        if deg[j] < target[j] and ra != rb:
            saved = parent[:]
            parent[ra] = rb
            deg[j] += 1
            chosen.append(k)
            if rec(k + 1):
                return True
            chosen.pop()
            deg[j] -= 1
            parent[:] = saved
        return rec(k + 1)

    if rec(0):
        return frozenset(chosen)
    return None


def is_hypertree(g: RibbonGraph, vector) -> bool:
    return find_tree_with_degrees(g, tuple(vector)) is not None


@lru_cache(maxsize=None)
def all_spanning_trees(g: RibbonGraph) -> tuple:
    return tuple(tours.enumerate_spanning_trees(g))


@lru_cache(maxsize=None)
def enumerate_hypertrees(g: RibbonGraph) -> tuple:
    """All hypertrees of g in lexicographic order (tuple of tuples)."""
    return tuple(sorted({degree_vector(g, t) for t in all_spanning_trees(g)}))


def representatives(g: RibbonGraph, h) -> list[frozenset]:
    """All spanning trees whose degree vector equals h."""
    h = tuple(h)
    return [t for t in all_spanning_trees(g) if degree_vector(g, t) == h]


def hypertrees_by_exchange(g: RibbonGraph) -> tuple:
    """Hypertree set via BFS over single exchange moves; cross-check path.

    Seeded from one degree vector; every h +/- (1_e - 1_f) passing the
    membership test is explored.  Agreement with enumerate_hypertrees is
    asserted by the test suite, not assumed here.
    """
    seed = degree_vector(g, next(iter(tours.enumerate_spanning_trees(g))))
    seen = {seed}
    queue = [seed]
    ne = g.emerald_count
    while queue:
        h = queue.pop()
        for e in range(ne):
            if h[e] == 0:
                continue
            for f in range(ne):
                if f == e:
                    continue
                h2 = list(h)
                h2[e] -= 1
                h2[f] += 1
                h2 = tuple(h2)
                if h2 not in seen and is_hypertree(g, h2):
                    seen.add(h2)
                    queue.append(h2)
    return tuple(sorted(seen))


def exchange_witness(g: RibbonGraph, h, h2, e) -> str:
    """The exchange axiom witness: an emerald f with h(f) > h2(f) such that
    h + 1_e - 1_f and h2 - 1_e + 1_f are both hypertrees.

    ``e`` may be an emerald name or index; requires h(e) < h2(e).
    """
    h, h2 = tuple(h), tuple(h2)
    ei = node_index(e) if isinstance(e, str) else e
    if h[ei] >= h2[ei]:
        raise ValueError("exchange_witness requires h(e) < h2(e)")
    for fi in range(g.emerald_count):
        if h[fi] <= h2[fi]:
            continue
        up = list(h)
        up[ei] += 1
        up[fi] -= 1
        down = list(h2)
        down[ei] -= 1
        down[fi] += 1
        if is_hypertree(g, tuple(up)) and is_hypertree(g, tuple(down)):
            return emerald(fi)
    raise NoWitness(f"no exchange witness for {h} -> {h2} at e{ei}")
