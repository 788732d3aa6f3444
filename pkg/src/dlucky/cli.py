"""Command-line surface: generate, label, verify, bound, solve, export-dot.

Files are the primary interchange; ``-`` stands for stdin/stdout.  Exit
codes: 0 success, 1 semantic negative (conflicts found or search budget
exceeded), 2 usage or format error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families
from .bounds import clique_bound, enumerate_maximum_cliques, lower_bound_thm1
from .dot import to_dot
from .graph import (
    cartesian_product,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    is_connected,
    path_graph,
)
from .labeling import max_label, verify
from .serialize import (
    graph_from_json,
    graph_to_json,
    labeling_from_json,
    labeling_to_json,
    report_to_json,
)
from .solver import DEFAULT_VERTEX_CAP, exact_eta


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _require(args, names: list[str], family: str):
    values = []
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise ValueError(f"family '{family}' requires --{name}")
        values.append(value)
    return values


def _family_graph(args):
    family = args.family
    if family == "complete":
        (n,) = _require(args, ["n"], family)
        return complete_graph(n)
    if family == "path":
        (m,) = _require(args, ["m"], family)
        return path_graph(m)
    if family == "cycle":
        (n,) = _require(args, ["n"], family)
        return cycle_graph(n)
    if family == "cylinder":
        m, n = _require(args, ["m", "n"], family)
        return cartesian_product(path_graph(m), cycle_graph(n))
    if family == "multipartite":
        n, t = _require(args, ["n", "t"], family)
        return complete_multipartite(n, t)
    return _built_family(args).graph


def _built_family(args):
    family = args.family
    if family == "corona":
        n, r = _require(args, ["n", "r"], family)
        return families.build_corona(n, r)
    if family == "web":
        m, n = _require(args, ["m", "n"], family)
        return families.build_web(m, n)
    if family == "cocktail":
        n, t, r = _require(args, ["n", "t", "r"], family)
        return families.build_cocktail(n, t, r)
    raise ValueError(f"family '{family}' has no optimal labeling builder")


def cmd_gen(args) -> int:
    graph = _family_graph(args)
    _write(args.out, graph_to_json(graph))
    return 0


def cmd_label(args) -> int:
    fam = _built_family(args)
    _write(args.out, labeling_to_json(fam.labeling))
    if args.roles:
        roles = {role: list(v) for role, v in fam.role_index.items()}
        _write(args.roles, json.dumps(roles, sort_keys=True, separators=(",", ":")) + "\n")
    report = verify(fam.graph, fam.labeling)
    print(f"claimed_eta={fam.claimed_eta}")
    print(f"max_label={max_label(fam.labeling)}")
    print(f"conflicts={len(report.conflicts)}")
    return 0


def cmd_verify(args) -> int:
    graph = graph_from_json(_read(args.graph))
    labeling = labeling_from_json(_read(args.labeling))
    report = verify(graph, labeling)
    if args.json:
        sys.stdout.write(report_to_json(report, labeling))
    else:
        for (u, v), s in report.conflicts:
            print(f"conflict: edge ({u}, {v}) shares d-sum {s}")
        verdict = "d-lucky" if report.is_d_lucky else "not d-lucky"
        print(f"{verdict}: {len(report.conflicts)} conflict(s), max label "
              f"{max(labeling.labels) if labeling.labels else 0}")
    return 0 if report.is_d_lucky else 1


def cmd_bound(args) -> int:
    graph = graph_from_json(_read(args.graph))
    if graph.n < 1 or not is_connected(graph):
        raise ValueError("lower bound requires a nonempty connected graph")
    records = enumerate_maximum_cliques(graph, vertex_cap=args.vertex_cap)
    omega = len(records[0].vertices)
    best = max(records, key=lambda rec: clique_bound(rec, omega))
    bound = lower_bound_thm1(graph, vertex_cap=args.vertex_cap)
    if args.json:
        obj = {
            "bound": bound,
            "omega": omega,
            "clique": list(best.vertices),
            "delta": best.delta,
            "max_deg": best.max_deg,
        }
        sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        print(f"lower bound: {bound}")
        print(
            f"witness clique: {list(best.vertices)} "
            f"(delta={best.delta}, Delta={best.max_deg}, omega={omega})"
        )
    return 0


def cmd_solve(args) -> int:
    graph = graph_from_json(_read(args.graph))
    max_k = args.max_k if args.max_k is not None else max(1, graph.n)
    result = exact_eta(graph, max_k=max_k, vertex_cap=args.vertex_cap)
    obj = {
        "eta": result.eta,
        "witness": list(result.witness.labels) if result.witness else None,
        "nodes_explored": result.nodes_explored,
        "k_tried": result.k_tried,
    }
    if args.json:
        sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")
    elif result.eta is not None:
        print(f"eta={result.eta}")
        print(f"witness={list(result.witness.labels)}")
        print(f"nodes_explored={result.nodes_explored}")
    else:
        print(f"exceeds budget: no labeling with up to {result.k_tried} labels")
        print(f"nodes_explored={result.nodes_explored}")
    return 0 if result.eta is not None else 1


def cmd_export_dot(args) -> int:
    graph = graph_from_json(_read(args.graph))
    labeling = None
    if args.labeling is not None:
        labeling = labeling_from_json(_read(args.labeling))
        if len(labeling) != graph.n:
            raise ValueError(
                f"labeling has {len(labeling)} entries for a graph on {graph.n} vertices"
            )
    _write(args.out, to_dot(graph, labeling))
    return 0


def _add_family_flags(parser) -> None:
    parser.add_argument("--n", type=int, default=None, help="order / part size / cycle length")
    parser.add_argument("--m", type=int, default=None, help="path length (cylinder depth)")
    parser.add_argument("--t", type=int, default=None, help="number of parts")
    parser.add_argument("--r", type=int, default=None, help="pendants per vertex")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dlucky",
        description="d-lucky labelings: family generators, verification, bounds, exact search",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family graph as canonical JSON")
    p.add_argument(
        "family",
        choices=[
            "complete", "path", "cycle", "corona",
            "cylinder", "web", "multipartite", "cocktail",
        ],
    )
    _add_family_flags(p)
    p.add_argument("-o", "--out", default="-", help="output path ('-' = stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("label", help="write a family's optimal labeling as JSON")
    p.add_argument("family", choices=["corona", "web", "cocktail"])
    _add_family_flags(p)
    p.add_argument("-o", "--out", default="-", help="output path ('-' = stdout)")
    p.add_argument("--roles", default=None, help="also write the role index map here")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="check a labeling file against a graph file")
    p.add_argument("graph")
    p.add_argument("labeling")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="clique lower bound with witnessing clique")
    p.add_argument("graph")
    p.add_argument("--vertex-cap", type=int, default=None,
                   help="refuse clique enumeration above this many vertices")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("solve", help="exact minimum label count by exhaustive search")
    p.add_argument("graph")
    p.add_argument("--max-k", type=int, default=None,
                   help="largest budget to try (default: vertex count)")
    p.add_argument("--vertex-cap", type=int, default=DEFAULT_VERTEX_CAP)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("export-dot", help="DOT text, annotated when a labeling is given")
    p.add_argument("graph")
    p.add_argument("--labeling", default=None)
    p.add_argument("-o", "--out", default="-", help="output path ('-' = stdout)")
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, OSError, families.ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
