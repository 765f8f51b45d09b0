"""Randomized instance generation and conjecture/invariance testing.

random_instance builds connected bipartite ribbon graphs with shuffled
rotations, deterministically per seed.  test_violet_prime compares the
polynomial built from violet-tour endpoint orders against the embedding
polynomial (an open conjecture: reported, not assumed).  The plain
violet-node order is also exposed, since it is known to disagree on some
instances; stress_invariance re-derives the embedding polynomial under
random rotation and basis perturbations, where any difference would be
an implementation bug.
"""

from __future__ import annotations

import random

from .model import RibbonGraph, violet, emerald
from .polynomial import Poly, x_plus_y_minus_1
from .hypertrees import enumerate_hypertrees
from . import jaeger
from . import tutte


class GenerationFailed(RuntimeError):
    """Could not generate a connected instance within the retry budget."""


DEFAULT_PARAMS = {"max_violet": 4, "max_emerald": 5, "max_edges": 12}


def random_instance(params=None, seed: int = 0) -> RibbonGraph:
    """Connected bipartite ribbon graph, deterministic per (params, seed)."""
    p = dict(DEFAULT_PARAMS, **(params or {}))
    rng = random.Random(seed)
    for _ in range(200):
        nv = rng.randint(1, p["max_violet"])
        ne = rng.randint(1, p["max_emerald"])
        lo = nv + ne - 1
        if lo > p["max_edges"]:
            continue
        m = rng.randint(lo, p["max_edges"])
        # random spanning tree of the node set first, to force connectivity
        nodes = [violet(i) for i in range(nv)] + [emerald(j) for j in range(ne)]
        rng.shuffle(nodes)
        edges = []
        for idx in range(1, len(nodes)):
            a = nodes[rng.randrange(idx)]
            b = nodes[idx]
            if a[0] == b[0]:
                break  # same color: retry whole instance
            edges.append((a, b) if a[0] == "v" else (b, a))
        else:
            while len(edges) < m:
                edges.append((violet(rng.randrange(nv)), emerald(rng.randrange(ne))))
            rotation = {}
            for k, (v, e) in enumerate(edges):
                rotation.setdefault(v, []).append(k)
                rotation.setdefault(e, []).append(k)
            for rot in rotation.values():
                rng.shuffle(rot)
            b0 = rng.choice(list(rotation))
            beta0 = rng.choice(rotation[b0])
            return RibbonGraph.build(nv, ne, edges, rotation, (b0, beta0))
    raise GenerationFailed(f"no connected instance for seed {seed}")


def perturbed(g: RibbonGraph, rng: random.Random) -> RibbonGraph:
    """Same underlying graph with shuffled rotations and a random basis."""
    rotation = {node: list(rot) for node, rot in g.rotations}
    for rot in rotation.values():
        rng.shuffle(rot)
    b0 = rng.choice(list(rotation))
    beta0 = rng.choice(rotation[b0])
    return RibbonGraph.build(
        g.violet_count, g.emerald_count, g.edges, rotation, (b0, beta0)
    )


def _polynomial_from(g: RibbonGraph, order_fn) -> Poly:
    out = Poly()
    for h in enumerate_hypertrees(g):
        rec = jaeger.activities(g, h, order_fn(g, h))
        out = out + Poly.monomial(rec.oi, rec.oe) * x_plus_y_minus_1() ** rec.ie
    return out


def violet_prime_polynomial(g: RibbonGraph) -> Poly:
    return _polynomial_from(g, jaeger.order_violet_prime)


def violet_polynomial(g: RibbonGraph) -> Poly:
    return _polynomial_from(g, jaeger.order_violet)


def _describe(g: RibbonGraph) -> dict:
    return {
        "violet": g.violet_count,
        "emerald": g.emerald_count,
        "edges": [[e[0], e[1]] for e in g.edges],
        "text": g.render(),
    }


def test_violet_prime(g: RibbonGraph) -> dict:
    """Compare the violet-prime-order polynomial to the embedding one."""
    reference = tutte.tutte_embedding(g)
    candidate = violet_prime_polynomial(g)
    if reference == candidate:
        return {"kind": "violet-prime", "verdict": "EQUAL",
                "polynomial": str(reference)}
    return {
        "kind": "violet-prime",
        "verdict": "COUNTEREXAMPLE",
        "instance": _describe(g),
        "embedding": str(reference),
        "violet_prime": str(candidate),
    }


def test_violet(g: RibbonGraph) -> dict:
    """Same comparison for the plain violet-node order."""
    reference = tutte.tutte_embedding(g)
    candidate = violet_polynomial(g)
    if reference == candidate:
        return {"kind": "violet", "verdict": "EQUAL"}
    return {
        "kind": "violet",
        "verdict": "COUNTEREXAMPLE",
        "instance": _describe(g),
        "embedding": str(reference),
        "violet": str(candidate),
    }


def stress_invariance(g: RibbonGraph, trials: int = 10, seed: int = 0) -> dict:
    """Recompute the embedding polynomial under random ribbon/basis
    perturbations; any difference indicates a bug."""
    rng = random.Random(seed)
    reference = tutte.tutte_embedding(g)
    for trial in range(trials):
        g2 = perturbed(g, rng)
        p2 = tutte.tutte_embedding(g2)
        if p2 != reference:
            return {
                "kind": "invariance",
                "verdict": "COUNTEREXAMPLE",
                "trial": trial,
                "instance": _describe(g2),
                "reference": str(reference),
                "got": str(p2),
            }
    return {"kind": "invariance", "verdict": "EQUAL", "trials": trials,
            "polynomial": str(reference)}


def search_counterexample(check, trials: int, seed: int = 0, params=None) -> dict:
    """Run ``check`` over ``trials`` random instances; stop at the first
    counterexample."""
    checked = 0
    for i in range(trials):
        g = random_instance(params, seed=seed + i)
        report = check(g)
        checked += 1
        if report["verdict"] != "EQUAL":
            report["seed"] = seed + i
            report["checked"] = checked
            return report
    return {"kind": "search", "verdict": "EQUAL", "checked": checked,
            "seed": seed}
