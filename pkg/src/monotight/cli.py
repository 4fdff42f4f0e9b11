"""Command-line entry point.

Every run prints one JSON object to stdout. Exit codes: 0 success,
1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction

from . import bounds, constructions, designs, fileio, properties, search
from .core import Hypergraph, mask_to_vertices, measure, shadow, t_tight_components


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True, default=_jsonable))


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if dataclasses.is_dataclass(value):
        return dataclasses.asdict(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError(f"not JSON serializable: {value!r}")


def _load_hypergraph(path: str) -> Hypergraph:
    with open(path) as fh:
        return fileio.read_hypergraph(fh)


def _load_coloring(path: str):
    with open(path) as fh:
        return fileio.read_coloring(fh)


def _cmd_components(args) -> int:
    h = _load_hypergraph(args.hypergraph)
    part = t_tight_components(h, args.t)
    _emit(
        {
            "subcommand": "components",
            "n": h.n,
            "k": h.k,
            "t": args.t,
            "count": len(part.components),
            "components": [
                [list(mask_to_vertices(h.edges[i])) for i in comp]
                for comp in part.components
            ],
        }
    )
    return 0


def _cmd_shadow(args) -> int:
    h = _load_hypergraph(args.hypergraph)
    sh = shadow(h.edges, args.s)
    _emit(
        {
            "subcommand": "shadow",
            "n": h.n,
            "k": h.k,
            "s": args.s,
            "count": sh.count,
            "members": sorted(list(mask_to_vertices(m)) for m in sh.members),
        }
    )
    return 0


def _cmd_measure(args) -> int:
    c = _load_coloring(args.coloring)
    res = measure(c, args.t, args.s)
    _emit(
        {
            "subcommand": "measure",
            "n": c.n,
            "k": c.k,
            "r": c.r,
            "t": args.t,
            "s": args.s,
            "value": res.value,
            "witness_color": res.witness_color,
            "witness_component_size": len(res.witness_component),
        }
    )
    return 0


def _cmd_bound(args) -> int:
    params = {}
    for name in ("n", "r", "k", "t", "s", "m"):
        val = getattr(args, name)
        if val is not None:
            params[name] = val
    for name in ("delta", "eps"):
        val = getattr(args, name)
        if val is not None:
            params[name] = val
    report = bounds.evaluate_bound(args.kind, **params)
    _emit({"subcommand": "bound", "kind": report.kind, "params": report.params, "value": report.value})
    return 0


def _cmd_constants(args) -> int:
    consts = bounds.special_constants()
    _emit(
        {
            "subcommand": "constants",
            "x0": consts.x0,
            "lambda_2313": consts.lambda_2313,
            "z_root": consts.z_root,
            "minmax_2323": consts.minmax_2323,
            "minmax_argmin": list(consts.minmax_argmin),
            "lambda_target_2323": str(consts.lambda_target_2323),
        }
    )
    return 0


def _cmd_construct(args) -> int:
    name = args.name
    if name == "all_red":
        if args.r is None or args.k is None:
            raise SystemExit2("all_red requires --r and --k")
        c = constructions.all_red(args.n, args.k, args.r)
    elif name == "majority":
        c = constructions.majority_coloring(args.n)
    elif name == "two_clique":
        c = constructions.two_clique_coloring(args.n)
    elif name == "parity":
        c = constructions.parity_coloring(args.n)
    elif name == "steiner":
        if args.design is None:
            raise SystemExit2("steiner requires --design")
        system = _resolve_design(args.design)
        if system.class_of is not None:
            classes = system.parallel_classes()
        else:
            classes, _ = designs.partition_blocks(system, args.t, order=args.order)
        c = constructions.steiner_coloring(system, classes, t=args.t)
    else:
        raise SystemExit2(f"unknown construction {name!r}")
    with open(args.out, "w") as fh:
        fileio.write_coloring(c, fh)
    _emit({"subcommand": "construct", "name": name, "n": c.n, "k": c.k, "r": c.r, "out": args.out})
    return 0


def _resolve_design(spec: str):
    if spec in ("fano", "s348", "ag23"):
        return designs.builtin_design(spec)
    if spec.startswith("ap"):
        return designs.affine_plane(int(spec[2:]))
    with open(spec) as fh:
        return fileio.read_design(fh)


def _cmd_design(args) -> int:
    system = _resolve_design(args.name)
    system.validate()
    report = {
        "subcommand": "design",
        "name": args.name,
        "n": system.n,
        "h": system.h,
        "k": system.k,
        "blocks": len(system.blocks),
        "valid": True,
    }
    if args.partition_t is not None:
        classes, degree_lb = designs.partition_blocks(system, args.partition_t, order=args.order)
        report["classes"] = len(classes)
        report["class_count_lower_bound"] = degree_lb
    if args.out:
        with open(args.out, "w") as fh:
            fileio.write_design(system, fh)
        report["out"] = args.out
    _emit(report)
    return 0


def _cmd_blowup(args) -> int:
    c0 = _load_coloring(args.base)
    c = constructions.blow_up(c0, args.n)
    with open(args.out, "w") as fh:
        fileio.write_coloring(c, fh)
    _emit({"subcommand": "blowup", "base_n": c0.n, "n": c.n, "k": c.k, "r": c.r, "out": args.out})
    return 0


def _cmd_search(args) -> int:
    res = search.exact_M(args.n, args.r, args.k, args.t, args.s, budget=args.budget)
    report = {
        "subcommand": "search",
        "n": args.n,
        "r": args.r,
        "k": args.k,
        "t": args.t,
        "s": args.s,
        "value": res.value,
        "status": res.status,
        "nodes": res.nodes_explored,
        "seconds": res.wall_time,
        "lower_bound": bounds.general_lower_bound(args.n, args.r, args.k, args.t, args.s),
        "threads": args.threads,
    }
    if args.k == 3 and (args.t, args.s) == (2, 3):
        report["note"] = "exact value is new data for these parameters, not a published one"
    if args.emit_witness:
        with open(args.emit_witness, "w") as fh:
            fileio.write_coloring(res.witness, fh)
        report["witness"] = args.emit_witness
    _emit(report)
    return 0


def _cmd_verify(args) -> int:
    suite = args.suite
    if suite == "kk":
        report = properties.verify_kk(trials=args.trials or 500, seed=args.seed)
    elif suite == "density":
        report = properties.verify_density(trials=args.trials or 300, seed=args.seed)
    elif suite == "lowerbound":
        report = properties.verify_lowerbound(trials=args.trials or 1000, seed=args.seed)
    elif suite == "blowup":
        report = properties.verify_blowup(trials=args.trials or 200, seed=args.seed)
    elif suite == "r2a":
        if args.n is not None:
            report = properties.verify_r2a_suite([(args.n, args.k, args.t, args.s)])
        else:
            report = properties.verify_r2a_suite()
    else:
        raise SystemExit2(f"unknown verify suite {suite!r}")
    report = {"subcommand": "verify", **report}
    _emit(report)
    return 0 if not report["violations"] else 1


class SystemExit2(Exception):
    """Invalid input detected outside argparse."""


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monotight")
    sub = p.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("components", help="t-tight components of a hypergraph file")
    sp.add_argument("--hypergraph", required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.set_defaults(fn=_cmd_components)

    sp = sub.add_parser("shadow", help="s-shadow of a hypergraph file")
    sp.add_argument("--hypergraph", required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.set_defaults(fn=_cmd_shadow)

    sp = sub.add_parser("measure", help="largest monochromatic component shadow of a coloring")
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.set_defaults(fn=_cmd_measure)

    sp = sub.add_parser("bound", help="evaluate a named closed-form bound")
    sp.add_argument("--kind", required=True, choices=sorted(bounds._BOUND_KINDS))
    for name in ("n", "r", "k", "t", "s", "m"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--delta", type=float)
    sp.add_argument("--eps", type=float)
    sp.set_defaults(fn=_cmd_bound)

    sp = sub.add_parser("constants", help="special constants of the two-coloring analysis")
    sp.set_defaults(fn=_cmd_constants)

    sp = sub.add_parser("construct", help="write an explicit coloring to a file")
    sp.add_argument("name", choices=["all_red", "majority", "two_clique", "parity", "steiner"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--design", help="builtin name, apQ, or a design file")
    sp.add_argument("--order", default="given", choices=["given", "complement-paired"])
    sp.add_argument("--out", required=True)
    sp.set_defaults(fn=_cmd_construct)

    sp = sub.add_parser("design", help="emit/validate a Steiner system")
    sp.add_argument("name", help="builtin name (fano, s348, ag23), apQ, or a file")
    sp.add_argument("--partition-t", type=int)
    sp.add_argument("--order", default="given", choices=["given", "complement-paired"])
    sp.add_argument("--out")
    sp.set_defaults(fn=_cmd_design)

    sp = sub.add_parser("blowup", help="blow a base coloring up to n vertices")
    sp.add_argument("--base", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(fn=_cmd_blowup)

    sp = sub.add_parser("search", help="exact M(n,r,k,t,s) by branch-and-bound")
    sp.add_argument("exact", choices=["exact"], nargs="?", default="exact")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--budget", type=int)
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--emit-witness")
    sp.set_defaults(fn=_cmd_search)

    sp = sub.add_parser("verify", help="run a named property suite")
    sp.add_argument("suite", choices=["kk", "density", "lowerbound", "blowup", "r2a"])
    sp.add_argument("--trials", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--s", type=int)
    sp.set_defaults(fn=_cmd_verify)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (fileio.FormatError, FileNotFoundError, SystemExit2, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
