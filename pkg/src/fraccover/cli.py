"""Command-line interface.

Every command builds one report document (a plain dict) and writes it once,
either as an aligned text listing or, with ``--json``, as JSON.  Rationals
are always rendered as ``p/q`` strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from .bounds import BoundRangeError, ab_colorable_bound, kneser_beta_lower_bound, n_colorable_bound, verify_hom_bound
from .cover import (
    NotVertexTransitive,
    Strategy,
    UnsupportedStrategy,
    cc_cover_sequence,
    cover_number,
    dual_clique_value,
    fractional_chromatic_number,
    kk_cover_sequence,
)
from .families import FamilyKind, FamilyLimitError, beta_k, max_clique_free_set
from .graph import Graph, GraphError, chromatic_number, clique_number
from .graphspec import GraphSpecError, parse_graph_spec
from .lp import format_rational
from .paper_check import run_paper_check

FAILURES = (GraphSpecError, GraphError, BoundRangeError, FamilyLimitError, UnsupportedStrategy, NotVertexTransitive, ValueError, ArithmeticError)


def _r(x: Fraction | int) -> str:
    return format_rational(Fraction(x))


def _summary(g: Graph, chi: Optional[int] = None) -> dict[str, Any]:
    out: dict[str, Any] = {"n": g.n, "edges": g.num_edges}
    if g.n:
        out["omega"] = clique_number(g)
    if chi is not None:
        out["chi"] = chi
    return out


def _kind(args) -> FamilyKind:
    if args.family == "independent":
        return FamilyKind.independent()
    if args.k is None:
        raise ValueError(f"--k is required for family {args.family}")
    return FamilyKind(args.family, args.k)


# ------------------------------------------------------------- commands


def cmd_cover(args) -> tuple[dict, int]:
    g = parse_graph_spec(args.graph)
    kind = _kind(args)
    sol = cover_number(g, kind, Strategy(args.strategy))
    result: dict[str, Any] = {
        "family": str(kind),
        "strategy": sol.strategy.value,
        "cover": _r(sol.objective),
        "dual_value": _r(dual_clique_value(sol)),
        "columns": sol.columns,
    }
    if args.members:
        result["members"] = [{"set": list(m), "weight": _r(w)} for m, w in sol.members]
        result["dual"] = [_r(y) for y in sol.dual]
    checks = {"certificates": not sol.problems(g)}
    return {"graph": _summary(g), "result": result, "checks": checks}, 0 if all(checks.values()) else 1


def cmd_sequence(args) -> tuple[dict, int]:
    g = parse_graph_spec(args.graph)
    if args.cls == "K":
        report = kk_cover_sequence(g, Strategy(args.strategy))
        summary = _summary(g)
    else:
        report = cc_cover_sequence(g)
        summary = _summary(g, chi=chromatic_number(g))
    result = {
        "class": args.cls,
        "k": [k for k, _, _ in report.entries],
        "cover": [_r(c) for c in report.covers],
        "k_times_cover": [_r(c) for c in report.scaled],
        "classification": report.classification.value,
    }
    checks = {"certificates": all(not s.problems(g) for s in report.solutions)}
    return {"graph": summary, "result": result, "checks": checks}, 0 if all(checks.values()) else 1


def cmd_beta(args) -> tuple[dict, int]:
    g = parse_graph_spec(args.graph)
    value = beta_k(g, args.k)
    result: dict[str, Any] = {"k": args.k, "beta": value}
    if args.members:
        result["witness"] = list(max_clique_free_set(g, args.k))
    return {"graph": _summary(g), "result": result}, 0


def cmd_chi_f(args) -> tuple[dict, int]:
    g = parse_graph_spec(args.graph)
    return {"graph": _summary(g), "result": {"chi_f": _r(fractional_chromatic_number(g, Strategy(args.strategy)))}}, 0


def cmd_hom(args) -> tuple[dict, int]:
    g1 = parse_graph_spec(args.graph)
    g2 = parse_graph_spec(args.target)
    ks = [args.k] if args.k is not None else list(range(1, clique_number(g1) + 1)) if g1.n else []
    rows = []
    ok = True
    for k in ks:
        rep = verify_hom_bound(g1, g2, k, Strategy(args.strategy))
        row: dict[str, Any] = {"k": k, "applicable": rep.applicable}
        if rep.applicable:
            row.update(source_cover=_r(rep.computed), target_cover=_r(rep.bound), satisfied=rep.satisfied)
            ok &= bool(rep.satisfied)
        else:
            row["note"] = rep.note
        rows.append(row)
    doc = {"graph": _summary(g1), "target": _summary(g2), "result": rows, "checks": {"bound_holds": ok}}
    return doc, 0 if ok else 1


def cmd_bounds(args) -> tuple[dict, int]:
    if args.kind == "n-colorable":
        if args.n is None:
            raise ValueError("--n is required for n-colorable")
        value = n_colorable_bound(args.n, args.k)
        params = {"n": args.n, "k": args.k}
    else:
        if args.a is None or args.b is None:
            raise ValueError(f"--a and --b are required for {args.kind}")
        params = {"a": args.a, "b": args.b, "k": args.k}
        if args.kind == "ab-colorable":
            value = ab_colorable_bound(args.a, args.b, args.k)
        else:
            value = kneser_beta_lower_bound(args.a, args.b, args.k)
    shown = str(value) if isinstance(value, int) else _r(value)
    return {"result": {"bound": args.kind, **params, "value": shown}}, 0


def cmd_paper_check(args) -> tuple[dict, int]:
    rows = run_paper_check(fast=args.fast)
    doc = {
        "rows": [
            {"key": r.key, "title": r.title, "expected": r.expected, "computed": r.computed, "status": "PASS" if r.passed else "MISMATCH"}
            for r in rows
        ],
        "checks": {"all_pass": all(r.passed for r in rows)},
    }
    return doc, 0 if all(r.passed for r in rows) else 1


# ------------------------------------------------------------- rendering


def _render_text(doc: dict) -> str:
    lines = [f"command: {doc['command']}"]
    for key in ("graph", "target"):
        if key in doc:
            lines.append(f"{key}: " + ", ".join(f"{k}={v}" for k, v in doc[key].items()))
    result = doc.get("result")
    if isinstance(result, dict) and "k_times_cover" in result:
        lines.append(f"{'k':>3}  {'cover':>12}  {'k*cover':>12}")
        for k, c, kc in zip(result["k"], result["cover"], result["k_times_cover"]):
            lines.append(f"{k:>3}  {c:>12}  {kc:>12}")
        lines.append(f"k*cover: {', '.join(result['k_times_cover'])}")
        lines.append(f"classification: {result['classification']}")
    elif isinstance(result, dict):
        for k, v in result.items():
            if isinstance(v, list):
                v = json.dumps(v)
            lines.append(f"{k}: {v}")
    elif isinstance(result, list):
        for row in result:
            lines.append("  " + ", ".join(f"{k}={v}" for k, v in row.items()))
    for row in doc.get("rows", []):
        lines.append(f"[{row['status']}] {row['key']}: {row['title']}")
        lines.append(f"    expected {row['expected']}")
        lines.append(f"    computed {row['computed']}")
    for k, v in doc.get("checks", {}).items():
        lines.append(f"check {k}: {'pass' if v else 'FAIL'}")
    return "\n".join(lines) + "\n"


COMMANDS = {
    "cover": cmd_cover,
    "sequence": cmd_sequence,
    "beta": cmd_beta,
    "chi-f": cmd_chi_f,
    "hom": cmd_hom,
    "bounds": cmd_bounds,
    "paper-check": cmd_paper_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    strategy = argparse.ArgumentParser(add_help=False)
    strategy.add_argument("--strategy", choices=[s.value for s in (Strategy.AUTO, Strategy.FULL_ENUMERATION, Strategy.COLUMN_GENERATION)], default="auto")
    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("--graph", required=True, help="graph expression, e.g. K6, C5, kneser:6:2, conormal(C5,C5), file:g.txt")

    parser = argparse.ArgumentParser(prog="fraccover", description="Exact fractional cover numbers of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cover", parents=[common, graph, strategy], help="fractional cover number")
    p.add_argument("--family", choices=["independent", "cliquefree", "colorable"], required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--members", action="store_true", help="list weighted members and duals")

    p = sub.add_parser("sequence", parents=[common, graph, strategy], help="cover sequence over k")
    p.add_argument("--class", dest="cls", choices=["K", "C"], default="K")

    p = sub.add_parser("beta", parents=[common, graph], help="largest (k+1)-clique-free induced subgraph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--members", action="store_true", help="also print a witness set")

    sub.add_parser("chi-f", parents=[common, graph, strategy], help="fractional chromatic number")

    p = sub.add_parser("hom", parents=[common, graph, strategy], help="homomorphism cover bound")
    p.add_argument("--target", required=True, help="graph expression for the homomorphic image")
    p.add_argument("--k", type=int)

    p = sub.add_parser("bounds", parents=[common], help="closed-form bounds")
    p.add_argument("--kind", choices=["n-colorable", "ab-colorable", "kneser-beta"], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("paper-check", parents=[common], help="reproduce every published value")
    p.add_argument("--fast", action="store_true", help="skip the long rows")
    return parser


def _execute(args, argv: Sequence[str]) -> tuple[Optional[dict], int]:
    try:
        doc, code = COMMANDS[args.command](args)
    except FAILURES as exc:
        print(f"fraccover {args.command}: error: {exc}", file=sys.stderr)
        return None, 1
    return {"command": " ".join(argv), **doc}, code


def render(doc: dict, as_json: bool = False) -> str:
    return json.dumps(doc, indent=2) + "\n" if as_json else _render_text(doc)


def run_command(argv: Sequence[str]) -> tuple[Optional[dict], int]:
    """Run one command; returns the report document (None on failure) and exit code.

    Usage errors raise ``SystemExit(2)`` from argparse.
    """
    argv = list(argv)
    return _execute(build_parser().parse_args(argv), argv)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    doc, code = _execute(args, argv)
    if doc is not None:
        sys.stdout.write(render(doc, args.json))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
