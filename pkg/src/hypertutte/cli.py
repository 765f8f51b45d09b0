"""Command-line interface.

Subcommands: tutte, hypertrees, jaeger, tour, crapo, delta, conjecture,
fixtures.  Exit codes: 0 success or PASS, 1 verification failure (or a
conjecture counterexample under --strict), 2 usage or input errors.
All output is deterministic; randomized commands take an explicit
--seed and default to a fixed constant.
"""

from __future__ import annotations

import argparse
import json
import sys

import yaml

from . import fixture_names, fixture_path
from .model import load_path, node_index, ParseError, ValidationError
from .polynomial import Poly
from . import tours, hypertrees, jaeger, tutte, crapo, delta, harness


def _load(path):
    try:
        return load_path(path)
    except FileNotFoundError as exc:
        raise SystemExit(_usage_error(f"cannot read {path}: {exc}"))
    except (ParseError, ValidationError) as exc:
        raise SystemExit(_usage_error(f"invalid instance {path}: {exc}"))


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _fmt_h(h) -> str:
    return ",".join(str(x) for x in h)


def _cmd_tutte(args) -> int:
    g = _load(args.instance)
    if args.method == "embedding":
        print(tutte.tutte_embedding(g))
    elif args.method == "fixed":
        if args.order:
            order = tuple(args.order.split(","))
            if sorted(order) != sorted(f"e{j}" for j in range(g.emerald_count)):
                return _usage_error("--order must list every emerald node once")
        else:
            order = tuple(f"e{j}" for j in range(g.emerald_count))
        print(tutte.tutte_from_order(g, order))
    else:  # corank-nullity
        imax, jmax = (int(x) for x in args.bounds.split(","))
        table = tutte.corank_nullity(g, imax, jmax)
        print("i\\j\t" + "\t".join(str(j) for j in range(jmax + 1)))
        for i in range(imax + 1):
            print(str(i) + "\t" + "\t".join(
                str(table.entry(i, j)) for j in range(jmax + 1)))
    return 0


def _cmd_hypertrees(args) -> int:
    g = _load(args.instance)
    for h in hypertrees.enumerate_hypertrees(g):
        print(_fmt_h(h))
    return 0


def _cmd_jaeger(args) -> int:
    g = _load(args.instance)
    emeraldish = args.variant == "emerald"
    for h in hypertrees.enumerate_hypertrees(g):
        if emeraldish:
            tree = jaeger.jaeger_tree_of(g, h)
            order = jaeger.order_emerald(g, h)
        else:
            tree = jaeger.violet_jaeger_tree_of(g, h)
            order = jaeger.order_violet_prime(g, h)
        rec = jaeger.activities(g, h, order)
        print(
            f"h={_fmt_h(h)} tree={','.join(str(k) for k in sorted(tree))} "
            f"order={'<'.join(order)} "
            f"Int={','.join(sorted(rec.internal, key=node_index))} "
            f"Ext={','.join(sorted(rec.external, key=node_index))}"
        )
    return 0


def _cmd_tour(args) -> int:
    g = _load(args.instance)
    try:
        tree = frozenset(int(k) for k in args.tree.split(","))
    except ValueError:
        return _usage_error("--tree must be comma-separated edge indices")
    if not tours.is_spanning_tree(g, tree):
        return _usage_error("--tree is not a spanning tree of the instance")
    if args.dot:
        print("graph tour {")
        for k, (v, e) in enumerate(g.edges):
            style = "solid" if k in tree else "dashed"
            print(f'  "{v}" -- "{e}" [label="{k}", style={style}];')
        print("}")
        return 0
    for node, edge in tours.tour(g, tree):
        print(f"{node} {edge}")
    return 0


def _emit_report(report, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        status = report.get("status") or report.get("verdict")
        print(f"{report['kind']}: {status}")
        for key in ("points", "hypertrees", "trials", "checked", "seed"):
            if key in report:
                print(f"  {key}: {report[key]}")
        for violation in report.get("violations", [])[:20]:
            print(f"  violation: {violation}")


def _cmd_crapo(args) -> int:
    g = _load(args.instance)
    box = None
    if args.box:
        lo, hi = (int(x) for x in args.box.split(","))
        box = [(lo, hi)] * g.emerald_count
    report = crapo.verify_crapo_partition(g, box=box, jobs=args.jobs)
    _emit_report(report, args.report == "json")
    return 0 if report["status"] == "PASS" else 1


def _embedding_assignment(g):
    P = delta.bases_from_hypertrees(g)
    assignment = {}
    for h in sorted(P.bases):
        rec = jaeger.embedding_activities(g, h)
        ni, ne = delta.nontrivial(P, h, rec.internal, rec.external)
        assignment[h] = delta.BasisActivity(rec.internal, rec.external, ni, ne)
    return P, assignment


def _cmd_delta(args) -> int:
    if args.action == "check":
        with open(args.bases, encoding="utf-8") as fh:
            P = delta.load_bases(fh.read())
        with open(args.tree, encoding="utf-8") as fh:
            dtree = delta.load_decision_tree(fh.read())
        delta.validate_decision_tree(dtree, P)
        assignment = delta.assignment_from_delta(dtree, P)
        for b, rec in assignment.items():
            print(
                f"b={_fmt_h(b)} order={'<'.join(delta.order_of_basis(dtree, P, b))} "
                f"Int={','.join(sorted(rec.internal))} "
                f"Ext={','.join(sorted(rec.external))} "
                f"nontrivial={','.join(sorted(rec.nontrivial_internal | rec.nontrivial_external))}"
            )
        report = delta.crapo_verify(P, assignment)
        _emit_report(report, args.report == "json")
        return 0 if report["status"] == "PASS" else 1
    # obstruct
    if args.source != "embedding":
        return _usage_error("only --from embedding is supported")
    g = _load(args.instance)
    _, assignment = _embedding_assignment(g)
    verdict, element = delta.obstruction_check(assignment)
    print(verdict if element is None else f"{verdict} {element}")
    return 0


def _cmd_conjecture(args) -> int:
    reports = []
    failed = False
    for path in args.instances:
        g = _load(path)
        report = harness.test_violet_prime(g)
        report["instance_path"] = path
        reports.append(report)
    for i in range(args.trials):
        g = harness.random_instance(seed=args.seed + i)
        report = harness.test_violet_prime(g)
        report["seed"] = args.seed + i
        reports.append(report)
    for report in reports:
        if report["verdict"] != "EQUAL":
            failed = True
    summary = {
        "kind": "violet-prime-summary",
        "verdict": "COUNTEREXAMPLE" if failed else "EQUAL",
        "checked": len(reports),
        "counterexamples": [r for r in reports if r["verdict"] != "EQUAL"],
    }
    _emit_report(summary, args.report == "json")
    return 1 if failed and args.strict else 0


def _cmd_fixtures(args) -> int:
    if args.action == "list":
        for name in fixture_names():
            print(name)
        return 0
    try:
        path = fixture_path(args.name)
    except FileNotFoundError as exc:
        return _usage_error(str(exc))
    sys.stdout.write(path.read_text(encoding="utf-8"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypertutte",
        description="Tutte polynomials of hypergraphs via embedding activities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tutte", help="compute the Tutte polynomial")
    p.add_argument("--method", choices=("embedding", "fixed", "corank-nullity"),
                   default="embedding")
    p.add_argument("--order", help="emerald order for --method fixed, e.g. e1,e0")
    p.add_argument("--bounds", default="3,3",
                   help="I,J window for --method corank-nullity")
    p.add_argument("instance")
    p.set_defaults(func=_cmd_tutte)

    p = sub.add_parser("hypertrees", help="list all hypertrees")
    p.add_argument("instance")
    p.set_defaults(func=_cmd_hypertrees)

    p = sub.add_parser("jaeger", help="list Jaeger trees, orders and activities")
    p.add_argument("--variant", choices=("emerald", "violet"), default="emerald")
    p.add_argument("instance")
    p.set_defaults(func=_cmd_jaeger)

    p = sub.add_parser("tour", help="print the tour of a spanning tree")
    p.add_argument("--tree", required=True, help="comma-separated edge indices")
    p.add_argument("--dot", action="store_true", help="emit a dot drawing instead")
    p.add_argument("instance")
    p.set_defaults(func=_cmd_tour)

    p = sub.add_parser("crapo", help="verify the Crapo partition on a box")
    p.add_argument("action", choices=("verify",))
    p.add_argument("--box", help="lo,hi applied to every coordinate")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", choices=("text", "json"), default="text")
    p.add_argument("instance")
    p.set_defaults(func=_cmd_crapo)

    p = sub.add_parser("delta", help="decision-tree activities")
    dsub = p.add_subparsers(dest="action", required=True)
    pc = dsub.add_parser("check", help="validate a decision tree and verify")
    pc.add_argument("--tree", required=True)
    pc.add_argument("--bases", required=True)
    pc.add_argument("--report", choices=("text", "json"), default="text")
    po = dsub.add_parser("obstruct", help="realizability obstruction check")
    po.add_argument("--from", dest="source", default="embedding")
    po.add_argument("instance")
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("conjecture", help="test the violet-prime conjecture")
    p.add_argument("variant", choices=("violet-prime",))
    p.add_argument("instances", nargs="*", help="instance files to test first")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--report", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser("fixtures", help="bundled example instances")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("name", nargs="?")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "fixtures" and args.action == "emit" and not args.name:
        return _usage_error("fixtures emit requires a name")
    try:
        return args.func(args)
    except SystemExit:
        raise
    except (ValueError, OSError) as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
