"""Command-line front end.

Every subcommand reads JSON files, writes a JSON result to stdout, and
can dump a DOT rendering with --dot.  Exit codes: 0 for success, 1 for
domain errors (bad input, failed verification, inapplicable route), 2
when the exact oracle ran out of budget before deciding.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Dict, List, Optional, Sequence

from .catalog import catalog as named_instances, k4 as _k4, q3 as _q3
from .coloring import (
    CLASS_I,
    CLASS_II,
    DEFAULT_EDGE_CAP,
    EdgeColoring,
    chromatic_index,
    is_proper,
    solve_edge_coloring,
)
from .complete_coloring import ClassIIWitness, color_complete_truncation
from .cyclic_coloring import (
    color_via_enabling,
    cyclic_even_valency,
    cyclic_from_class_one,
    find_enabling_submultigraph,
    vector3_admissible,
)
from .errors import GraphError, UndecidedError
from .io import (
    coloring_from_obj,
    coloring_to_obj,
    first_clash,
    graph_from_obj,
    graph_to_obj,
    load_graph,
    load_json,
    load_truncation,
    sun_report,
    to_dot,
    truncation_from_obj,
    truncation_to_obj,
)
from .multigraph import Multigraph
from .strong_arboreal import NotApplicable, arboreal_is_class_one, color_by_strong
from .sun import admissible, build_sun_even, build_sun_odd, verify_totally_inadmissible
from .truncation import (
    Truncation,
    arboreal_truncation,
    complete_truncation,
    cyclic_truncation,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_UNDECIDED = 2


def _emit(obj: Dict[str, object]) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _maybe_dot(
    args,
    g: Multigraph,
    coloring: Optional[EdgeColoring] = None,
    tr: Optional[Truncation] = None,
) -> None:
    if not getattr(args, "dot", None):
        return
    bold = tr.matching_ids if tr is not None else ()
    clusters = tr.clusters if tr is not None else None
    with open(args.dot, "w", encoding="utf-8") as fh:
        fh.write(to_dot(g, coloring, bold, clusters))


def _bundle(tr: Truncation, coloring: EdgeColoring) -> Dict[str, object]:
    flat = tr.graph
    return {
        "truncation": truncation_to_obj(tr),
        "vertices": list(flat.vertices),
        "edges": [list(flat.endpoints(eid)) for eid in flat.edge_ids],
        "coloring": coloring_to_obj(coloring),
    }


def _parse_vector(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise GraphError(f"vector {text!r} is not a comma-separated integer list") from None


def cmd_truncate(args) -> int:
    g = load_graph(args.graph)
    if args.kind == "complete":
        tr = complete_truncation(g)
    elif args.kind == "cyclic":
        tr = cyclic_truncation(g, None)
    else:
        tr = arboreal_truncation(g, None)
    flat = tr.graph
    obj = truncation_to_obj(tr)
    obj.update(
        {
            "kind": args.kind,
            "vertices": list(flat.vertices),
            "edges": [list(flat.endpoints(eid)) for eid in flat.edge_ids],
            "max_valency": flat.max_valency(),
        }
    )
    _emit(obj)
    _maybe_dot(args, flat, None, tr)
    return EXIT_OK


def cmd_color_complete(args) -> int:
    g = load_graph(args.graph)
    out = color_complete_truncation(g, budget=args.budget)
    if isinstance(out, ClassIIWitness):
        obj = {
            "class": "II",
            "delta": out.delta,
            "witness": {"nodes": out.nodes, "reason": out.reason},
        }
        if args.witness:
            _emit(obj)
            return EXIT_OK
        print(f"class II: {out.reason}", file=sys.stderr)
        _emit(obj)
        return EXIT_DOMAIN
    tr, coloring = out
    obj = {"class": "I", "delta": g.max_valency()}
    obj.update(_bundle(tr, coloring))
    _emit(obj)
    _maybe_dot(args, tr.graph, coloring, tr)
    return EXIT_OK


def cmd_cyclic_color(args) -> int:
    g = load_graph(args.graph)
    extras: Dict[str, object] = {"strategy": args.strategy}
    if args.strategy == "even":
        orders = None
        if args.seed is not None:
            rng = random.Random(args.seed)
            orders = {
                v: rng.sample(range(g.valency(v)), g.valency(v)) for v in g.vertices
            }
            extras["orders"] = {str(v): list(o) for v, o in sorted(orders.items())}
        tr, coloring = cyclic_even_valency(g, orders)
    elif args.strategy == "classone":
        d = g.regular_valency()
        if d is None or d % 2 == 0 or d < 3:
            raise GraphError("classone strategy needs a regular source of odd valency >= 3")
        solved, _ = solve_edge_coloring(g, d, budget=args.budget)
        if solved is None:
            raise GraphError(
                f"source admits no proper {d}-coloring; the folding route does not apply"
            )
        tr, coloring = cyclic_from_class_one(g, EdgeColoring(solved, d))
    else:
        if args.enabling_edges is not None:
            y = _parse_vector(args.enabling_edges) if args.enabling_edges else []
        else:
            y = find_enabling_submultigraph(g)
            if y is None:
                raise GraphError("no enabling submultigraph with even components exists")
        extras["enabling_edges"] = sorted(y)
        tr, coloring = color_via_enabling(g, y)
    obj = dict(extras)
    obj.update(_bundle(tr, coloring))
    _emit(obj)
    _maybe_dot(args, tr.graph, coloring, tr)
    return EXIT_OK


def cmd_color_strong(args) -> int:
    tr = load_truncation(args.truncation)
    out = color_by_strong(tr, budget=args.budget)
    if isinstance(out, NotApplicable):
        print(f"not applicable: {out.reason}", file=sys.stderr)
        _emit(
            {
                "applicable": False,
                "vertex": out.vertex,
                "delta": out.delta,
                "reason": out.reason,
            }
        )
        return EXIT_DOMAIN
    _emit(
        {
            "applicable": True,
            "delta": tr.graph.max_valency(),
            "coloring": coloring_to_obj(out),
        }
    )
    _maybe_dot(args, tr.graph, out, tr)
    return EXIT_OK


def cmd_sun(args) -> int:
    vector = _parse_vector(args.vector)
    r, d = sum(vector), len(vector)
    if admissible(vector):
        sun = build_sun_odd(vector) if r % 2 == 1 else build_sun_even(vector)
        _emit(sun_report(sun))
        if args.dot:
            g = sun.sun_graph()
            flat_colors = dict(enumerate(sun.pendant_colors))
            for i, c in zip(range(r, r + len(sun.constituent_colors)), sun.constituent_colors):
                flat_colors[i] = c
            _maybe_dot(args, g, EdgeColoring(flat_colors, sun.palette_size))
        return EXIT_OK
    if d == 3 and r >= 3:
        verdict, _ = vector3_admissible(*vector)
    elif r <= 8 and verify_totally_inadmissible(vector):
        verdict = "TOTALLY_INADMISSIBLE"
    else:
        verdict = "INADMISSIBLE"
    _emit({"vector": vector, "verdict": verdict})
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = load_graph(args.graph)
    edge_cap = args.edge_cap if args.edge_cap is not None else DEFAULT_EDGE_CAP
    res = chromatic_index(g, budget=args.budget, edge_cap=edge_cap)
    delta = g.max_valency()
    if not res.decided:
        _emit(
            {
                "decided": False,
                "lower_bound": res.lower_bound,
                "nodes": res.nodes,
            }
        )
        print("oracle undecided within budget", file=sys.stderr)
        return EXIT_UNDECIDED
    obj: Dict[str, object] = {
        "decided": True,
        "chi": res.chi,
        "delta": delta,
        "class": "I" if res.classify(delta) == CLASS_I else "II",
        "nodes": res.nodes,
    }
    if res.certificate is not None:
        obj["coloring"] = coloring_to_obj(res.certificate)
        _maybe_dot(args, g, res.certificate)
    _emit(obj)
    return EXIT_OK


def _graph_for_verify(obj: object, origin: str) -> Multigraph:
    if isinstance(obj, dict) and "constituents" in obj and "source" in obj:
        return truncation_from_obj(obj, origin).graph
    return graph_from_obj(obj, origin)


def cmd_verify(args) -> int:
    first = load_json(args.files[0])
    if len(args.files) == 1:
        if not (isinstance(first, dict) and "coloring" in first):
            raise GraphError(
                f"{args.files[0]}: single-file verify needs a bundle with a \"coloring\" key"
            )
        if "truncation" in first:
            g = truncation_from_obj(first["truncation"], args.files[0]).graph
        else:
            g = _graph_for_verify(first, args.files[0])
        coloring = coloring_from_obj(first["coloring"], args.files[0])
    else:
        g = _graph_for_verify(first, args.files[0])
        coloring = coloring_from_obj(load_json(args.files[1]), args.files[1])
    if set(coloring.assignment) != set(g.edge_ids):
        raise GraphError("coloring does not cover exactly the graph's edges")
    clash = first_clash(g, coloring)
    if clash is None:
        _emit(
            {
                "proper": True,
                "palette": coloring.palette_size,
                "colors_used": len(coloring.used_colors()),
            }
        )
        _maybe_dot(args, g, coloring)
        return EXIT_OK
    v, e1, e2 = clash
    _emit(
        {
            "proper": False,
            "vertex": v,
            "clash": [e1, e2],
            "color": coloring.color_of(e1),
        }
    )
    print(f"edges {e1} and {e2} share color {coloring.color_of(e1)} at vertex {v}", file=sys.stderr)
    return EXIT_DOMAIN


def cmd_demo(args) -> int:
    name = args.name
    if name in ("petersen", "two-k5-bridge", "k4"):
        g = named_instances()[name]()
        obj: Dict[str, object] = {"name": name}
        obj.update(graph_to_obj(g))
        obj.update({"order": g.order, "size": g.size, "max_valency": g.max_valency()})
        _emit(obj)
        _maybe_dot(args, g)
        return EXIT_OK
    if name == "q3-ccc":
        tr = cyclic_truncation(_q3(), None)
    elif name == "truncated-tetrahedron":
        tr = cyclic_truncation(_k4(), None)
    else:
        raise GraphError(f"unknown demo {name!r}")
    flat = tr.graph
    obj = {"name": name}
    obj.update(graph_to_obj(flat))
    obj.update(truncation_to_obj(tr))
    obj.update({"order": flat.order, "size": flat.size, "max_valency": flat.max_valency()})
    _emit(obj)
    _maybe_dot(args, flat, None, tr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="truncolor",
        description="Generalized truncations of multigraphs and their edge colorings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, budget: bool = True) -> None:
        p.add_argument("--dot", metavar="PATH", help="write a DOT rendering here")
        if budget:
            p.add_argument("--budget", type=int, default=None, help="search node cap")

    p = sub.add_parser("truncate", help="build a truncation from a graph file")
    p.add_argument("graph")
    p.add_argument("--kind", choices=("complete", "cyclic", "arboreal"), default="complete")
    common(p, budget=False)
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("color-complete", help="color a complete truncation optimally")
    p.add_argument("graph")
    p.add_argument(
        "--witness",
        action="store_true",
        help="treat a class II witness as a successful output",
    )
    common(p)
    p.set_defaults(func=cmd_color_complete)

    p = sub.add_parser("cyclic-color", help="3-color a cyclic truncation")
    p.add_argument("graph")
    p.add_argument("--strategy", choices=("even", "classone", "enabling"), required=True)
    p.add_argument(
        "--enabling-edges",
        default=None,
        help="comma-separated edge ids for the enabling strategy",
    )
    p.add_argument("--seed", type=int, default=None, help="randomize cycle orders")
    common(p)
    p.set_defaults(func=cmd_cyclic_color)

    p = sub.add_parser("color-strong", help="color a truncation via strong constituents")
    p.add_argument("truncation")
    common(p)
    p.set_defaults(func=cmd_color_strong)

    p = sub.add_parser("sun", help="build or refute a sun for a pendant vector")
    p.add_argument("--vector", required=True, help="comma-separated counts, e.g. 2,1,1")
    common(p, budget=False)
    p.set_defaults(func=cmd_sun)

    p = sub.add_parser("oracle", help="exact chromatic index")
    p.add_argument("graph")
    p.add_argument("--edge-cap", type=int, default=None, help="largest size to attempt")
    common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    p.add_argument("files", nargs="+", metavar="FILE")
    common(p, budget=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("demo", help="emit a named instance")
    p.add_argument(
        "name",
        choices=("petersen", "two-k5-bridge", "k4", "q3-ccc", "truncated-tetrahedron"),
    )
    common(p, budget=False)
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except UndecidedError as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED


if __name__ == "__main__":
    sys.exit(main())
