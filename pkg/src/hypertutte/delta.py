"""Decision-tree (Delta) activities for matroids and polymatroids.

A decision tree assigns each basis its own element order: at a node
labeled e, a basis with b(e)=i descends into the (i+1)-th child, and the
order is the label sequence along the branch.  Delta activities use the
MAX rule (an element is active if it cannot be exchanged with a larger
one); the minimum-rule kernel is also provided for activity notions that
fix an order per basis directly, as in the parallel-edge counterexample.

Also here: the Crapo partition check for an arbitrary activity
assignment, the realizability obstruction (some element must be
nontrivially active for no basis), and exhaustive search over all
decision trees.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import yaml


class BasisOutOfRange(ValueError):
    """Basis vector exceeds the rank cap of some element."""


class SearchSpaceTooLarge(ValueError):
    """The decision-tree space exceeds the enumeration guard."""


class InvalidDecisionTree(ValueError):
    """Branch misses an element, repeats one, or has wrong arity."""


_SEARCH_GUARD = 2_000_000


@dataclass(frozen=True)
class PolymatroidBases:
    """Explicit polymatroid: named ground set and the set of base vectors."""

    ground: tuple
    bases: frozenset

    def __post_init__(self):
        if not self.bases:
            raise ValueError("empty base set")
        sums = {sum(b) for b in self.bases}
        if len(sums) != 1:
            raise ValueError("bases have differing coordinate sums")
        self._check_exchange()

    def _check_exchange(self):
        """Exchange axiom: whenever b(e) < b'(e) there is f with
        b(f) > b'(f) such that b + 1_e - 1_f and b' - 1_e + 1_f are bases."""
        n = len(self.ground)
        for b in self.bases:
            for b2 in self.bases:
                for e in range(n):
                    if b[e] >= b2[e]:
                        continue
                    if not any(
                        b[f] > b2[f]
                        and _shift(b, e, f) in self.bases
                        and _shift(b2, f, e) in self.bases
                        for f in range(n)
                    ):
                        raise ValueError(
                            f"exchange axiom fails for {b}, {b2} at "
                            f"{self.ground[e]}"
                        )

    def rank(self, e) -> int:
        i = self.index(e)
        return max(b[i] for b in self.bases)

    def index(self, e) -> int:
        return self.ground.index(e)

    def value(self, b, e) -> int:
        return b[self.index(e)]


def _shift(b, up, down):
    out = list(b)
    out[up] += 1
    out[down] -= 1
    return tuple(out)


def load_bases(text: str) -> PolymatroidBases:
    data = yaml.safe_load(text)
    ground = tuple(str(e) for e in data["ground"])
    bases = frozenset(tuple(int(x) for x in b) for b in data["bases"])
    if any(len(b) != len(ground) for b in bases):
        raise ValueError("basis length does not match ground set")
    return PolymatroidBases(ground, bases)


def bases_from_hypertrees(g) -> PolymatroidBases:
    """The hypergraphic polymatroid of a ribbon graph instance."""
    from .hypertrees import enumerate_hypertrees
    from .model import emerald

    ground = tuple(emerald(j) for j in range(g.emerald_count))
    return PolymatroidBases(ground, frozenset(enumerate_hypertrees(g)))


@dataclass(frozen=True)
class DecisionTree:
    """Node labeled ``label`` with an ordered tuple of child subtrees."""

    label: str
    children: tuple

    @staticmethod
    def from_dict(data) -> "DecisionTree":
        label = str(data["label"])
        children = tuple(
            DecisionTree.from_dict(ch) for ch in data.get("children") or ()
        )
        return DecisionTree(label, children)


def load_decision_tree(text: str) -> DecisionTree:
    return DecisionTree.from_dict(yaml.safe_load(text))


def validate_decision_tree(tree: DecisionTree, P: PolymatroidBases):
    """Every branch lists every ground element exactly once; every
    non-final node has r(label)+1 children."""
    n = len(P.ground)

    def walk(node, seen):
        if node.label not in P.ground:
            raise InvalidDecisionTree(f"unknown element {node.label!r}")
        if node.label in seen:
            raise InvalidDecisionTree(f"element {node.label!r} repeats on a branch")
        seen = seen | {node.label}
        if len(seen) == n:
            if node.children:
                raise InvalidDecisionTree("branch longer than the ground set")
            return
        arity = P.rank(node.label) + 1
        if len(node.children) != arity:
            raise InvalidDecisionTree(
                f"node {node.label!r} needs {arity} children, has {len(node.children)}"
            )
        for child in node.children:
            walk(child, seen)

    walk(tree, frozenset())


def order_of_basis(tree: DecisionTree, P: PolymatroidBases, b) -> tuple:
    """Label sequence along the branch selected by basis b."""
    b = tuple(b)
    order = []
    node = tree
    while True:
        order.append(node.label)
        if not node.children:
            break
        value = P.value(b, node.label)
        if value < 0 or value >= len(node.children):
            raise BasisOutOfRange(
                f"b({node.label}) = {value} out of range for arity "
                f"{len(node.children)}"
            )
        node = node.children[value]
    return tuple(order)


def max_rule_activities(P: PolymatroidBases, b, order):
    """e internally active iff no f > e with b - 1_e + 1_f a basis;
    externally active iff no f > e with b + 1_e - 1_f a basis."""
    return _rule_activities(P, b, order, later=True)


def min_rule_activities(P: PolymatroidBases, b, order):
    """Same with f < e quantification (the fixed-order convention)."""
    return _rule_activities(P, b, order, later=False)


def _rule_activities(P, b, order, later):
    b = tuple(b)
    internal, external = set(), set()
    for pos, e in enumerate(order):
        others = order[pos + 1:] if later else order[:pos]
        ei = P.index(e)
        if not any(_shift(b, P.index(f), ei) in P.bases for f in others):
            internal.add(e)
        if not any(_shift(b, ei, P.index(f)) in P.bases for f in others):
            external.add(e)
    return frozenset(internal), frozenset(external)


def nontrivial(P: PolymatroidBases, b, internal, external):
    """Filter to elements whose value actually varies in the active
    direction across the base set."""
    b = tuple(b)
    ni = frozenset(
        e for e in internal if any(b2[P.index(e)] < b[P.index(e)] for b2 in P.bases)
    )
    ne = frozenset(
        e for e in external if any(b2[P.index(e)] > b[P.index(e)] for b2 in P.bases)
    )
    return ni, ne


@dataclass(frozen=True)
class BasisActivity:
    internal: frozenset
    external: frozenset
    nontrivial_internal: frozenset
    nontrivial_external: frozenset


def assignment_from_delta(tree: DecisionTree, P: PolymatroidBases) -> dict:
    """basis -> BasisActivity under the decision tree's MAX-rule orders."""
    out = {}
    for b in sorted(P.bases):
        internal, external = max_rule_activities(P, b, order_of_basis(tree, P, b))
        ni, ne = nontrivial(P, b, internal, external)
        out[b] = BasisActivity(internal, external, ni, ne)
    return out


def assignment_from_orders(P: PolymatroidBases, order_map: dict) -> dict:
    """basis -> BasisActivity from explicit per-basis orders, MIN rule."""
    out = {}
    for b in sorted(P.bases):
        internal, external = min_rule_activities(P, b, order_map[b])
        ni, ne = nontrivial(P, b, internal, external)
        out[b] = BasisActivity(internal, external, ni, ne)
    return out


def obstruction_check(assignment: dict) -> tuple:
    """('EXEMPT', e) if some element is nontrivially active for no basis
    (necessary for Delta-realizability); ('NO_EXEMPT', None) otherwise."""
    elements = set()
    active = set()
    for record in assignment.values():
        active |= record.nontrivial_internal | record.nontrivial_external
        elements |= record.internal | record.external
    exempt = sorted(elements - active)
    if exempt:
        return ("EXEMPT", exempt[0])
    return ("NO_EXEMPT", None)


def interval_contains(P: PolymatroidBases, b, record: BasisActivity, c) -> bool:
    """Delta-Crapo membership: excess only on externally active
    coordinates, deficit only on internally active ones."""
    for i, e in enumerate(P.ground):
        if c[i] > b[i] and e not in record.external:
            return False
        if c[i] < b[i] and e not in record.internal:
            return False
    return True


def crapo_verify(P: PolymatroidBases, assignment: dict, box=None) -> dict:
    """Check that the intervals of an activity assignment partition the
    box and that the covering basis attains the d1 distance."""
    n = len(P.ground)
    if box is None:
        box = [
            (min(b[i] for b in P.bases) - 2, max(b[i] for b in P.bases) + 2)
            for i in range(n)
        ]
    violations = []
    points = 0
    for c in itertools.product(*(range(lo, hi + 1) for lo, hi in box)):
        points += 1
        covering = [
            b for b, record in assignment.items()
            if interval_contains(P, b, record, c)
        ]
        if len(covering) != 1:
            violations.append({"point": list(c), "covered_by": [list(b) for b in covering]})
            continue
        b = covering[0]
        dist = sum(abs(ci - bi) for ci, bi in zip(c, b))
        best = min(
            sum(abs(ci - bi) for ci, bi in zip(c, b2)) for b2 in P.bases
        )
        if dist != best:
            violations.append({"point": list(c), "covered_by": [list(b)],
                               "distance": [dist, best]})
    return {
        "kind": "delta-crapo",
        "status": "PASS" if not violations else "FAIL",
        "points": points,
        "violations": violations,
    }


def graph_matroid(graph) -> PolymatroidBases:
    """Cycle matroid of an ordinary graph: bases are the 0/1 indicator
    vectors of its spanning trees, over the named edge ground set."""
    from . import tours

    edges = [(i, u, v) for i, (_, u, v) in enumerate(graph.edges)]
    names = graph.edge_names()
    bases = set()
    for tree in tours._trees(edges, graph.vertex_count, []):
        bases.add(tuple(1 if i in tree else 0 for i in range(len(names))))
    return PolymatroidBases(tuple(names), frozenset(bases))


def basis_name(P: PolymatroidBases, b) -> str:
    """Concatenated names of the elements present in a 0/1 basis."""
    return "".join(e for e, x in zip(P.ground, b) if x)


def fixed_tree_order_activities(graph, order_map: dict) -> tuple:
    """Prop-6.4-style assignment: each spanning tree carries its own
    element order (keyed by concatenated edge names), MIN-rule
    activities.  Returns (matroid, assignment)."""
    P = graph_matroid(graph)
    by_basis = {b: tuple(order_map[basis_name(P, b)]) for b in P.bases}
    return P, assignment_from_orders(P, by_basis)


def count_decision_trees(ground, ranks) -> int:
    """Number of decision trees: T(S) = sum_e (r(e)+1) powers of subtrees."""
    memo = {}

    def count(elems):
        if len(elems) <= 1:
            return 1
        if elems in memo:
            return memo[elems]
        total = 0
        for e in elems:
            rest = tuple(x for x in elems if x != e)
            total += count(rest) ** (ranks[e] + 1)
        memo[elems] = total
        return total

    return count(tuple(ground))


def enumerate_decision_trees(ground, ranks):
    """All decision trees over the ground set, deterministically ordered."""

    def gen(elems):
        if len(elems) == 1:
            yield DecisionTree(elems[0], ())
            return
        for e in elems:
            rest = tuple(x for x in elems if x != e)
            subtrees = list(gen(rest))
            for combo in itertools.product(subtrees, repeat=ranks[e] + 1):
                yield DecisionTree(e, combo)

    yield from gen(tuple(ground))


def random_decision_tree(ground, ranks, rng) -> DecisionTree:
    """A uniformly structured random decision tree (labels chosen
    uniformly at each node, subtrees drawn independently)."""

    def gen(elems):
        e = elems[rng.randrange(len(elems))]
        rest = tuple(x for x in elems if x != e)
        if not rest:
            return DecisionTree(e, ())
        return DecisionTree(e, tuple(gen(rest) for _ in range(ranks[e] + 1)))

    return gen(tuple(ground))


def exhaustive_delta_search(P: PolymatroidBases, target: dict):
    """A decision tree whose MAX-rule nontrivial activity sets equal the
    target assignment's, or None after exhausting the space.

    Activity sets of a Delta always differ trivially from MIN-rule ones
    (the branch maximum vs. minimum is forced active), so assignments
    are compared on their nontrivial sets, which both conventions aim at.
    """
    ranks = {e: P.rank(e) for e in P.ground}
    total = count_decision_trees(P.ground, ranks)
    if total > _SEARCH_GUARD:
        raise SearchSpaceTooLarge(f"{total} decision trees exceed the guard")
    want = {
        b: (rec.nontrivial_internal, rec.nontrivial_external)
        for b, rec in target.items()
    }
    bases = sorted(P.bases)
    for tree in enumerate_decision_trees(P.ground, ranks):
        ok = True
        for b in bases:
            internal, external = max_rule_activities(
                P, b, order_of_basis(tree, P, b)
            )
            if nontrivial(P, b, internal, external) != want[b]:
                ok = False
                break
        if ok:
            return tree
    return None
