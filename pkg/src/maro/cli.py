"""Command line entry point.

Non-interactive; JSON on stdout (unless another format is selected),
diagnostics on stderr.  Exit codes: 0 success, 1 check failure, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .efficiency import Kind, Strictness, maro_efficient, mro_efficient
from .fixtures import FIXTURE_META, FIXTURE_NAMES, fixture
from .images import (
    BoundGrid,
    WeightGrid,
    image_eps,
    image_eps_grid,
    image_pb,
    image_ws,
    image_ws_grid,
    render_svg,
)
from .instances import DEFAULT_TOL, Instance, InstanceError, Tolerance, dump_instance, load_instance
from .relations import SetRelSpec, VecRel, Weight, parse_relation
from .scalarize import GenBound, eps_efficient_set, f_pb, pb_efficient_set, ws_efficient_set
from .verify import compare_concepts, run_battery


class UsageError(Exception):
    pass


def _jsonable(obj):
    if isinstance(obj, float):
        if obj == math.inf:
            return "+inf"
        if obj == -math.inf:
            return "-inf"
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _emit_json(doc):
    sys.stdout.write(json.dumps(_jsonable(doc), indent=2, sort_keys=True) + "\n")


def _add_instance_args(p: argparse.ArgumentParser):
    p.add_argument("--instance", metavar="FILE", help="instance JSON document")
    p.add_argument("--fixture", metavar="NAME",
                   help=f"built-in instance ({', '.join(FIXTURE_NAMES)})")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL.tau,
                   help="comparison tolerance (default 1e-9)")


def _load(args) -> tuple[Instance, Tolerance]:
    if bool(args.instance) == bool(args.fixture):
        raise UsageError("exactly one of --instance or --fixture is required")
    try:
        tol = Tolerance(args.tol)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.fixture:
        return fixture(args.fixture), tol
    try:
        with open(args.instance, encoding="utf-8") as fh:
            return load_instance(fh.read()), tol
    except OSError as e:
        raise UsageError(f"cannot read {args.instance}: {e.strerror}") from None


def _parse_weight(text: str) -> Weight:
    try:
        return Weight(tuple(float(c) for c in text.split(",")))
    except ValueError as e:
        raise UsageError(f"bad --lambda {text!r}: {e}") from None


def _parse_eps(text: str, j: int) -> tuple[float, ...]:
    out = []
    for i, token in enumerate(text.split(",")):
        if token.strip() == "_":
            if i != j - 1:
                raise UsageError(f"placeholder '_' only allowed in slot {j} (the minimized one)")
            out.append(0.0)
        else:
            try:
                out.append(float(token))
            except ValueError:
                raise UsageError(f"bad --eps entry {token!r}") from None
    return tuple(out)


def _cmd_validate(args) -> int:
    inst, _ = _load(args)
    _emit_json({
        "ok": True,
        "name": inst.name,
        "n": inst.n,
        "decisions": list(inst.decisions),
        "scenarios": list(inst.scenarios),
        "points": sum(len(v) for v in inst.recourse.values()),
        "sampled": inst.sampled,
    })
    return 0


def _cmd_fixtures(args) -> int:
    if args.dump:
        sys.stdout.write(dump_instance(fixture(args.dump)))
        return 0
    _emit_json({"fixtures": {name: FIXTURE_META[name] for name in FIXTURE_NAMES}})
    return 0


def _cmd_efficiency(args) -> int:
    inst, tol = _load(args)
    strictness = Strictness(args.strictness)
    try:
        rel = parse_relation(args.rel)
    except ValueError as e:
        raise UsageError(str(e)) from None
    kind = Kind(args.kind)
    if args.mro:
        if isinstance(rel, VecRel):
            strictness = {VecRel.LEQQ: Strictness.STRICT, VecRel.LEQ: Strictness.PLAIN,
                          VecRel.LT: Strictness.WEAK}[rel]
        verdict = mro_efficient(inst, args.x, kind, strictness, tol)
        relation = strictness.value
    else:
        if isinstance(rel, VecRel):
            raise UsageError("vector relations apply to --mro checks; "
                             "three-stage notions need u, l, or lmin:<csv>")
        if kind is Kind.POINT_BASED:
            raise UsageError("point-based is a two-stage notion; add --mro "
                             "or use solve-pb")
        verdict = maro_efficient(inst, args.x, kind, strictness, rel, tol)
        relation = args.rel
    doc = {
        "instance": inst.name,
        "x": args.x,
        "kind": kind.value,
        "strictness": strictness.value,
        "relation": relation,
        "efficient": verdict.efficient,
        "witness": None if verdict.efficient else {
            "xprime": verdict.witness.xprime,
            "scenarios": {u: xp for u, xp in verdict.witness.scenario_map},
        },
    }
    _emit_json(doc)
    return 0


def _cmd_solve_ws(args) -> int:
    inst, tol = _load(args)
    lam = _parse_weight(args.lam)
    sel = ws_efficient_set(inst, lam, Strictness(args.strictness), tol)
    _emit_json({
        "concept": "ws",
        "lambda": list(lam.values),
        "strictness": args.strictness,
        "efficient": list(sel.decisions),
        "guarantees": {x: g.value for x, g in sel.entries},
        "strict_empty_tie": sel.strict_empty_tie,
        "plain_guarantee": sel.plain_guarantee,
    })
    return 0


def _cmd_solve_eps(args) -> int:
    inst, tol = _load(args)
    eps = _parse_eps(args.eps, args.j)
    try:
        gb = GenBound(eps, args.j)
    except ValueError as e:
        raise UsageError(str(e)) from None
    sel = eps_efficient_set(inst, gb, Strictness(args.strictness), tol)
    _emit_json({
        "concept": "eps",
        "eps": list(gb.eps),
        "j": gb.j,
        "strictness": args.strictness,
        "efficient": list(sel.decisions),
        "guarantees": {x: g.value for x, g in sel.entries},
        "strict_empty_tie": sel.strict_empty_tie,
        "plain_guarantee": sel.plain_guarantee,
        "infeasible": sel.infeasible,
    })
    return 0


def _cmd_solve_pb(args) -> int:
    inst, tol = _load(args)
    efficient = pb_efficient_set(inst, Strictness(args.strictness), tol)
    _emit_json({
        "strictness": args.strictness,
        "efficient": list(efficient),
        "fpb": {x: list(f_pb(inst, x)) for x in inst.decisions},
    })
    return 0


def _points_csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(f"{c:.17g}" if isinstance(c, float) else str(c)
                              for c in row))
    return "\n".join(lines) + "\n"


def _cmd_image(args) -> int:
    inst, tol = _load(args)
    n = inst.n
    if args.what == "ws":
        if args.grid_k:
            grid = WeightGrid(n, args.grid_k)
            tagged = image_ws_grid(inst, grid, tol)
            doc = {"concept": "ws", "grid_k": args.grid_k,
                   "points": [{"lambda": list(l), "point": list(p)} for l, p in tagged]}
            rows = [list(l) + list(p) for l, p in tagged]
            header = [f"lambda_{i+1}" for i in range(n)] + [f"f{i+1}" for i in range(n)]
        elif args.lam:
            lam = _parse_weight(args.lam)
            pts = image_ws(inst, lam, tol)
            doc = {"concept": "ws", "lambda": list(lam.values),
                   "points": [list(p) for p in pts]}
            rows = [list(p) for p in pts]
            header = [f"f{i+1}" for i in range(n)]
        else:
            raise UsageError("image ws needs --lambda or --grid-k")
    elif args.what == "eps":
        if not args.j:
            raise UsageError("image eps needs --j")
        if args.eps_list:
            try:
                with open(args.eps_list, encoding="utf-8") as fh:
                    eps_values = json.load(fh)
            except (OSError, json.JSONDecodeError) as e:
                raise UsageError(f"cannot read --eps-list: {e}") from None
            if (not isinstance(eps_values, list)
                    or not all(isinstance(e, list) and len(e) == n for e in eps_values)):
                raise UsageError(f"--eps-list must be a JSON array of length-{n} arrays")
            grid = BoundGrid(args.j, tuple(tuple(map(float, e)) for e in eps_values))
            img = image_eps_grid(inst, grid, tol)
            doc = {"concept": "eps", "j": args.j,
                   "points": [list(p) for p in img.points],
                   "infeasible": [list(p) for p in img.infeasible]}
            rows = [list(p) for p in img.points]
        elif args.eps:
            gb = GenBound(_parse_eps(args.eps, args.j), args.j)
            one = image_eps(inst, gb, tol)
            doc = {"concept": "eps", "j": args.j, "point": list(one.point),
                   "feasible": one.feasible}
            rows = [list(one.point)] if one.feasible else []
        else:
            raise UsageError("image eps needs --eps or --eps-list")
        header = [f"f{i+1}" for i in range(n)]
    else:
        pts = image_pb(inst, tol)
        doc = {"concept": "pb", "points": [list(p) for p in pts]}
        rows = [list(p) for p in pts]
        header = [f"f{i+1}" for i in range(n)]

    if args.format == "csv":
        sys.stdout.write(_points_csv(header, rows))
    else:
        _emit_json(doc)
    return 0


def _extract_points(doc) -> list[tuple[float, ...]]:
    if isinstance(doc, dict):
        if "points" in doc:
            doc = doc["points"]
        elif "point" in doc:
            doc = [doc["point"]]
        else:
            raise UsageError("input JSON has no 'points' field")
    if not isinstance(doc, list):
        raise UsageError("input JSON must be a point list or an image document")
    pts = []
    for entry in doc:
        if isinstance(entry, dict):
            entry = entry.get("point")
        if not isinstance(entry, list):
            raise UsageError("cannot interpret input entries as points")
        try:
            pts.append(tuple(float(c) for c in entry))
        except (TypeError, ValueError):
            raise UsageError("cannot interpret input entries as points") from None
    return pts


def _cmd_plot(args) -> int:
    datasets = []
    if args.infile:
        try:
            with open(args.infile, encoding="utf-8") as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"cannot read {args.infile}: {e}") from None
        datasets.append((args.label or "points", _extract_points(doc)))
    else:
        inst, tol = _load(args)
        if args.what == "pb":
            datasets.append(("pb", list(image_pb(inst, tol))))
        elif args.what == "ws":
            if not args.lam:
                raise UsageError("plot --what ws needs --lambda")
            lam = _parse_weight(args.lam)
            datasets.append(("ws", list(image_ws(inst, lam, tol))))
        elif args.what == "eps":
            if not (args.eps and args.j):
                raise UsageError("plot --what eps needs --eps and --j")
            one = image_eps(inst, GenBound(_parse_eps(args.eps, args.j), args.j), tol)
            if not one.feasible:
                raise UsageError("constraint image is infeasible; nothing to plot")
            datasets.append(("eps", [one.point]))
        else:
            raise UsageError("plot needs --in FILE or --what ws|eps|pb")
    try:
        svg = render_svg(datasets, connect=args.connect)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(svg)
    return 0


def _cmd_verify(args) -> int:
    try:
        report = run_battery(args.seed, args.count, args.check or None,
                             jitter=args.jitter, tol=Tolerance(args.tol))
    except ValueError as e:
        raise UsageError(str(e)) from None
    sys.stdout.write(report.to_json())
    return 0 if report.passed else 1


def _cmd_compare(args) -> int:
    inst, tol = _load(args)
    lam = _parse_weight(args.lam)
    gb = GenBound(_parse_eps(args.eps, args.j), args.j)
    table = compare_concepts(inst, lam, gb, tol)
    if args.format == "md":
        sys.stdout.write(_compare_md(table))
    else:
        _emit_json(table)
    return 0


def _compare_md(t: dict) -> str:
    def fmt(v):
        if isinstance(v, float) and math.isinf(v):
            return "+inf" if v > 0 else "-inf"
        return v

    ws, eps, pb = t["weighted_sum"], t["constraint"], t["point_based"]
    rows = [
        ("efficient (plain)", ws["plain"], eps["plain"], pb["plain"]),
        ("efficient (strict)", ws["strict"], eps["strict"], pb["strict"]),
        ("guarantee", {k: fmt(v) for k, v in ws["guarantee"].items()},
         {k: fmt(v) for k, v in eps["guarantee"].items()}, "trivial bounds only"),
        ("bounds hold", ws["bounds_hold"], eps["bounds_hold"], "-"),
        ("image", ws["image"], fmt(eps["image"]), pb["image"]),
        ("image nondominance", ws["image_weakly_nondominated"],
         "weakly nondominated by construction", pb["image_nondominated"]),
    ]
    lines = [
        f"# Concept comparison on {t['instance']}",
        "",
        f"lambda = {t['lambda']}, eps = {[fmt(v) for v in t['eps']]}, j = {t['j']}",
        "",
        "| property | weighted sum | constraint | point-based |",
        "|---|---|---|---|",
    ]
    for name, a, b, c in rows:
        lines.append(f"| {name} | {fmt(a)} | {fmt(b)} | {fmt(c)} |")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="maro",
        description="Efficiency concepts for multicriteria adjustable robustness "
                    "on finite instances.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate an instance document")
    _add_instance_args(p)
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("fixtures", help="list built-in instances")
    p.add_argument("--dump", metavar="NAME", help="print one fixture as JSON")
    p.set_defaults(fn=_cmd_fixtures)

    p = sub.add_parser("efficiency", help="three-stage (or --mro two-stage) efficiency check")
    _add_instance_args(p)
    p.add_argument("--x", required=True, help="decision to test")
    p.add_argument("--kind", required=True,
                   choices=[k.value for k in Kind])
    g = p.add_mutually_exclusive_group()
    g.add_argument("--strict", dest="strictness", action="store_const",
                   const="strict", default="strict")
    g.add_argument("--weak", dest="strictness", action="store_const", const="weak")
    g.add_argument("--plain", dest="strictness", action="store_const", const="plain")
    p.add_argument("--rel", default="l",
                   help="relation selector: u[-strict], l[-strict], "
                        "lmin[-strict]:<csv>, or leqq/leq/lt with --mro")
    p.add_argument("--mro", action="store_true",
                   help="evaluate the two-stage robust notion (singleton recourse)")
    p.set_defaults(fn=_cmd_efficiency)

    p = sub.add_parser("solve-ws", help="weighted-sum efficient set")
    _add_instance_args(p)
    p.add_argument("--lambda", dest="lam", required=True, metavar="CSV")
    p.add_argument("--strictness", choices=["plain", "strict"], default="plain")
    p.set_defaults(fn=_cmd_solve_ws)

    p = sub.add_parser("solve-eps", help="constraint efficient set")
    _add_instance_args(p)
    p.add_argument("--eps", required=True, metavar="CSV",
                   help="generating bound; '_' may mark the minimized slot")
    p.add_argument("--j", type=int, required=True, help="minimized objective (1-based)")
    p.add_argument("--strictness", choices=["plain", "strict"], default="plain")
    p.set_defaults(fn=_cmd_solve_eps)

    p = sub.add_parser("solve-pb", help="point-based efficient set")
    _add_instance_args(p)
    p.add_argument("--strictness", choices=["strict", "plain", "weak"], default="plain")
    p.set_defaults(fn=_cmd_solve_pb)

    p = sub.add_parser("image", help="objective-space image of a concept")
    _add_instance_args(p)
    p.add_argument("what", choices=["ws", "eps", "pb"])
    p.add_argument("--lambda", dest="lam", metavar="CSV")
    p.add_argument("--grid-k", type=int, help="weight simplex resolution")
    p.add_argument("--eps", metavar="CSV")
    p.add_argument("--eps-list", metavar="FILE", help="JSON array of bound vectors")
    p.add_argument("--j", type=int)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(fn=_cmd_image)

    p = sub.add_parser("plot", help="render an image set as SVG (two objectives)")
    _add_instance_args(p)
    p.add_argument("--in", dest="infile", metavar="FILE",
                   help="point list or image JSON from 'maro image'")
    p.add_argument("--label", help="legend label for --in data")
    p.add_argument("--what", choices=["ws", "eps", "pb"])
    p.add_argument("--lambda", dest="lam", metavar="CSV")
    p.add_argument("--eps", metavar="CSV")
    p.add_argument("--j", type=int)
    p.add_argument("--connect", action="store_true", help="trace points with a polyline")
    p.add_argument("--format", choices=["svg"], default="svg")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(fn=_cmd_plot)

    p = sub.add_parser("verify", help="run the property harness on generated instances")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--check", action="append", metavar="ID",
                   help="restrict to one check id (repeatable)")
    p.add_argument("--jitter", type=float, default=0.0,
                   help="add uniform coordinate noise below this bound")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL.tau)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("compare", help="side-by-side concept comparison")
    _add_instance_args(p)
    p.add_argument("--lambda", dest="lam", required=True, metavar="CSV")
    p.add_argument("--eps", required=True, metavar="CSV")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--format", choices=["json", "md"], default="json")
    p.set_defaults(fn=_cmd_compare)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, InstanceError, ValueError) as e:
        print(f"maro: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
