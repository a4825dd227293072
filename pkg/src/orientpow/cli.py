"""Command-line interface.

Exit status: 0 success, 1 usage error, 2 invalid input, 3 a construction
missed its claimed diameter (a bug signal).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from .classify import classify_od, cyclic_on
from .corpus import CORPUS
from .digraph import ArcSet, complete, directed_diameter, eccentricity, fmt_dist
from .errors import (ConstructionError, GroupValidationError, NoStrongOrientationError,
                     NotApplicableError, UnsupportedGroupError)
from .expr import parse_group_expr
from .groups import (Group, ge_classes, is_generalized_quaternion, is_nilpotent,
                     maximal_cyclic_subgroups, realize)
from .oracle import SearchBudget, Unknown, exact_od, exists_orientation_diam_le
from .powgraph import is_two_edge_connected, power_graph, variant_graph

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2, 3
THREADS_ENV = "ORIENTPOW_THREADS"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _group(text: str) -> Group:
    return realize(parse_group_expr(text))


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def _threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise GroupValidationError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_info(args) -> int:
    G = _group(args.expr)
    X = power_graph(G)
    conn = is_two_edge_connected(X)
    census = Counter(int(k) for k in G.order_of)
    _emit({
        "group": G.name, "order": G.n, "primes": G.prime_divisors,
        "abelian": G.is_abelian, "cyclic": G.is_cyclic, "p_group": G.is_p_group,
        "nilpotent": is_nilpotent(G), "quaternion": is_generalized_quaternion(G),
        "element_orders": {str(k): census[k] for k in sorted(census)},
        "ge_classes": len(ge_classes(G).classes),
        "maximal_cyclic_orders": sorted(len(C) for C in maximal_cyclic_subgroups(G)),
        "power_graph_edges": X.num_edges,
        "two_edge_connected": bool(conn),
        "bridge": list(conn.bridge) if conn.bridge else None,
    })
    return EXIT_OK


def cmd_graph(args) -> int:
    G = _group(args.expr)
    X = variant_graph(G, args.kind)
    sys.stdout.write(X.to_dot(f"{args.kind}({G.name})") if args.format == "dot" else X.to_json() + "\n")
    return EXIT_OK


def cmd_classify(args) -> int:
    G = _group(args.expr)
    rep = classify_od(G, orient=args.orient or args.complete, verify=args.verify, timing=args.timing)
    if args.complete and rep.orientation is not None:
        rep.orientation = complete(rep.orientation)
        rep.diameter = directed_diameter(rep.orientation)
    _emit(rep.to_dict(include_arcs=args.arcs))
    if args.verify and rep.verified is False:
        print(f"verification failed for {G.name}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _orientation(G: Group, method: str) -> tuple[ArcSet, int]:
    from . import orient as O

    if method == "auto":
        rep = classify_od(G, orient=True)
        if rep.orientation is None or rep.od == float("inf"):
            raise NoStrongOrientationError(f"Pow({G.name}) has a bridge", rep.certificates)
        return rep.orientation, int(rep.interval[1])
    if method == "glued4":
        return O.orient_glued_diam4(G), 4
    if method in ("cyclic2", "cyclic3"):
        if not G.is_cyclic:
            raise UnsupportedGroupError(f"{G.name} is not cyclic")
        if method == "cyclic3":
            return cyclic_on(G, O.orient_cyclic_diam3(G.n)), 3
        d, arcs = O.orient_cyclic(G.n)
        if d != 2:
            raise UnsupportedGroupError(f"Pow(Z({G.n})) has no diameter-2 orientation (oriented diameter {fmt_dist(d)})")
        return cyclic_on(G, arcs), 2
    if method == "quaternion3":
        return O.quaternion_arcs(G), 3
    if method == "nilpotent3":
        d, arcs = O.orient_nilpotent(G)
        if d != 3:
            raise UnsupportedGroupError(f"{G.name} satisfies none of the diameter-3 conditions")
        return arcs, 3
    raise GroupValidationError(f"unknown method {method!r}")


def cmd_orient(args) -> int:
    G = _group(args.expr)
    arcs, claim = _orientation(G, args.method)
    if args.complete:
        arcs = complete(arcs)
    diam = directed_diameter(arcs)
    if args.format == "dot":
        header = f"{args.method} orientation of Pow({G.name}); claimed diameter {claim}; BFS diameter {fmt_dist(diam)}"
        sys.stdout.write(arcs.to_dot(f"Pow({G.name})", header=header))
    else:
        out = {"group": G.name, "method": args.method, "claimed": claim, "diameter": fmt_dist(diam),
               "ecc_e": fmt_dist(eccentricity(arcs, 0)), **arcs.to_dict()}
        _emit(out)
    if diam > claim:
        print(f"orientation diameter {fmt_dist(diam)} exceeds claimed {claim}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_oracle(args) -> int:
    G = _group(args.expr)
    X = variant_graph(G, args.kind)
    budget = SearchBudget(args.max_edges, args.max_nodes, args.time_limit)
    if args.k is not None:
        dec = exists_orientation_diam_le(X, args.k, budget, mode=args.mode)
        out = {"group": G.name, "kind": args.kind, "edges": X.num_edges, "k": args.k,
               "answer": dec.answer, "nodes": dec.nodes}
        if dec.witness is not None:
            out["witness"] = dec.witness.to_dict()
        _emit(out)
        return EXIT_OK
    stats: dict = {}
    val = exact_od(X, budget, mode=args.mode, stats=stats)
    out = {"group": G.name, "kind": args.kind, "edges": X.num_edges,
           "mode": stats.get("mode"), "nodes": stats.get("nodes")}
    if isinstance(val, Unknown):
        out.update(od="unknown", bounds=[fmt_dist(val.lo), fmt_dist(val.hi)])
    else:
        out["od"] = fmt_dist(val)
    if stats.get("witness") is not None:
        out["witness"] = stats["witness"].to_dict()
    _emit(out)
    return EXIT_OK


def cmd_table(args) -> int:
    if args.family != "zn":
        raise GroupValidationError(f"unknown table family {args.family!r}; only 'zn' is available")
    bad = 0
    rows = []
    for n in range(1, args.max + 1):
        rep = classify_od(realize(parse_group_expr(f"Z({n})")), verify=True)
        rows.append({"n": n, "od": fmt_dist(rep.od), "diameter": fmt_dist(rep.diameter)
                     if rep.diameter is not None else None, "verified": rep.verified})
        bad += not rep.verified
    if args.json:
        _emit(rows)
    else:
        print(f"{'n':>4}  {'od':>4}  {'bfs':>4}  ok")
        for r in rows:
            print(f"{r['n']:>4}  {r['od']:>4}  {str(r['diameter']):>4}  {'yes' if r['verified'] else 'NO'}")
    return EXIT_MISMATCH if bad else EXIT_OK


def _run_entry(entry):
    rep = classify_od(realize(parse_group_expr(entry.expr)), verify=True)
    expect_ok = rep.od == entry.od if entry.od is not None else rep.od is None
    cond_ok = entry.condition is None or (rep.conditions is not None and entry.condition in rep.conditions.matched)
    return entry, rep, expect_ok and cond_ok


def cmd_corpus(args) -> int:
    with ThreadPoolExecutor(_threads()) as pool:
        results = list(pool.map(_run_entry, CORPUS))
    bad = sum(1 for _, rep, ok in results if not (ok and rep.verified))
    if args.json:
        _emit([{**rep.to_dict(), "expected": fmt_dist(e.od) if e.od is not None else None,
                "condition": e.condition, "agrees": ok} for e, rep, ok in results])
    else:
        print(f"{'group':<16} {'od':>7} {'rule':<18} {'bound':<11} {'bfs':>4}  ok")
        for e, rep, ok in results:
            od = fmt_dist(rep.od) if rep.od is not None else "[{},{}]".format(*map(fmt_dist, rep.interval))
            bfs = fmt_dist(rep.diameter) if rep.diameter is not None else "-"
            print(f"{e.expr:<16} {od:>7} {rep.rule:<18} {rep.lower_bound:<11} {bfs:>4}  "
                  f"{'yes' if ok and rep.verified else 'NO'}")
        print(f"{len(results) - bad}/{len(results)} groups agree and verify")
    return EXIT_MISMATCH if bad else EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="orientpow", description="Oriented diameter of power graphs of finite groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("info", help="group census")
    s.add_argument("expr")
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("graph", help="export Pow(G), EPow(G) or Com(G)")
    s.add_argument("expr")
    s.add_argument("--kind", choices=("pow", "epow", "com"), default="pow")
    s.add_argument("--format", choices=("dot", "json"), default="json")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("classify", help="exact oriented diameter (or bounds) with certificates")
    s.add_argument("expr")
    s.add_argument("--orient", action="store_true", help="build and BFS-check a witness orientation")
    s.add_argument("--verify", action="store_true", help="re-check certificates and the orientation")
    s.add_argument("--complete", action="store_true", help="orient leftover edges low->high")
    s.add_argument("--arcs", action="store_true", help="include the arc list in the report")
    s.add_argument("--timing", action="store_true", help="wall time per step")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("orient", help="build one construction")
    s.add_argument("expr")
    s.add_argument("--method", default="auto",
                   choices=("auto", "glued4", "cyclic2", "cyclic3", "quaternion3", "nilpotent3"))
    s.add_argument("--format", choices=("dot", "json"), default="json")
    s.add_argument("--complete", action="store_true", help="orient leftover edges low->high")
    s.set_defaults(func=cmd_orient)

    s = sub.add_parser("oracle", help="brute-force oriented diameter for small graphs")
    s.add_argument("expr")
    s.add_argument("--k", type=int, help="decide whether some orientation has diameter <= K")
    s.add_argument("--kind", choices=("pow", "epow", "com"), default="pow")
    s.add_argument("--mode", choices=("auto", "exhaustive", "backtrack"), default="auto")
    s.add_argument("--max-edges", type=int, default=20, help="exhaustive search up to this many edges")
    s.add_argument("--max-nodes", type=int, default=2_000_000)
    s.add_argument("--time-limit", type=float, default=60.0)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("table", help="oriented diameters of a family, verified row by row")
    s.add_argument("family", choices=("zn",))
    s.add_argument("--max", type=int, default=60)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("corpus", help="classify and verify the built-in catalogue")
    s.add_argument("action", choices=("run",))
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (GroupValidationError, UnsupportedGroupError, NotApplicableError,
            NoStrongOrientationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
