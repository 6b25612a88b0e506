"""Command-line front end.

Exit codes: 0 success, 2 bad arguments or unparsable graph spec,
3 counter overflow, 4 order cap or search budget exceeded.

Environment overrides: ODDTURAN_ORDER_CAP, ODDTURAN_MAP_BUDGET, ODDTURAN_WORKERS.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import __version__
from .constructions import SpecError, parse_family, parse_graph
from .enumerate import MAX_EXHAUSTIVE_ORDER, OrderCapExceeded, all_graphs_filtered, random_graphs
from .experiments import (degree_stability_scan, density_trend, edge_stability_measure, extremal_search,
                          turan_degree_reference, vertex_extendability_check,
                          vertex_extendability_scan)
from .formats import to_graph6
from .graph import GraphError
from .hom import (DEFAULT_MAP_BUDGET, BudgetExceeded, CountOverflow, Pattern, copy_count,
                  count_hom, count_inj, edit_distance_to_colorable, is_colorable,
                  q_degree_profile)
from .report import Report, degree_payload, graph_ref, pattern_ref, rat

EXIT_USAGE = 2
EXIT_OVERFLOW = 3
EXIT_CAP = 4


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise SpecError(f"{name}={value!r} is not an integer") from None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--order-cap", type=int, default=None,
                        help=f"exhaustive enumeration cap (default {MAX_EXHAUSTIVE_ORDER})")
    common.add_argument("--budget", type=int, default=None,
                        help=f"map budget for edit-distance search (default {DEFAULT_MAP_BUDGET})")
    common.add_argument("--workers", type=int, default=None,
                        help="parallel workers for scans (default: CPU count)")

    parser = argparse.ArgumentParser(prog="oddturan", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"oddturan {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="hom / inj / copy counts")
    p.add_argument("--pattern", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--mode", choices=("hom", "inj", "copies"), default="inj")

    p = sub.add_parser("degree", parents=[common], help="per-vertex Q-degrees")
    p.add_argument("--pattern", required=True)
    p.add_argument("--graph", required=True)

    p = sub.add_parser("colorable", parents=[common], help="homomorphism into a target")
    p.add_argument("--graph", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--distance", action="store_true", help="also report edge-deletion distance")

    def experiment(name: str, help_: str, target: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--pattern", required=True)
        p.add_argument("--forbid", required=True, help="comma-separated forbidden family")
        if target:
            p.add_argument("--target", required=True)
        return p

    p = experiment("extremal", "max inj(Q, G) over F-free n-vertex graphs", target=False)
    p.add_argument("--witness-cap", type=int, default=32)
    p = experiment("trend", "finite generalized Turan density for n = 1..N", target=False)
    p.add_argument("--n-min", type=int, default=1)
    experiment("scan", "degree-stability scan")
    p = experiment("extend", "vertex-extendability check or batch scan")
    p.add_argument("--ratio", type=_fraction, default=Fraction(0))
    p.add_argument("--graph", help="single instance; omit for a batch scan over all F-free graphs")
    p.add_argument("--vertex", type=int, default=0)
    p = experiment("edgestab", "edit distance of near-extremal graphs to the target family")
    p.add_argument("--near", type=_fraction, default=Fraction(1))

    p = sub.add_parser("reference", parents=[common], help="average C5-degree of T(n, r)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("generate", parents=[common], help="spool graphs as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forbid", default="")
    p.add_argument("--random", action="store_true", help="G(n, p) samples instead of all classes")
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--count", type=int, default=10)
    return parser


def run_config(args: argparse.Namespace) -> dict:
    """Every run parameter, with env overrides resolved."""
    params = {k: (rat(v) if isinstance(v, Fraction) else v) for k, v in sorted(vars(args).items())
              if k not in ("command", "format", "out", "seed", "order_cap", "budget", "workers")}
    order_cap = args.order_cap if args.order_cap is not None else _env_int("ODDTURAN_ORDER_CAP", MAX_EXHAUSTIVE_ORDER)
    budget = args.budget if args.budget is not None else _env_int("ODDTURAN_MAP_BUDGET", DEFAULT_MAP_BUDGET)
    workers = args.workers if args.workers is not None else _env_int("ODDTURAN_WORKERS", os.cpu_count() or 1)
    return {"command": args.command, "params": params, "seed": args.seed,
            "caps": {"order_cap": order_cap, "map_budget": budget},
            "workers": workers, "format": args.format, "out": args.out}


def _cmd_count(a, cfg) -> Report:
    q, g = Pattern.of(parse_graph(a.pattern)), parse_graph(a.graph)
    fn = {"hom": count_hom, "inj": count_inj, "copies": copy_count}[a.mode]
    value = fn(q, g)
    rep = Report("count", cfg, {"mode": a.mode, "value": value,
                                "pattern": pattern_ref(q, a.pattern), "graph": graph_ref(g)})
    rep.summary = [(a.mode, value)]
    rep.headline = str(value)
    return rep


def _cmd_degree(a, cfg) -> Report:
    q, g = Pattern.of(parse_graph(a.pattern)), parse_graph(a.graph)
    prof = q_degree_profile(q, g)
    rep = Report("degree", cfg, {"pattern": pattern_ref(q, a.pattern), "graph": graph_ref(g),
                                 **degree_payload(prof)})
    rep.summary = [("min", prof.min), ("avg", prof.avg), ("max", prof.max), ("inj", prof.total)]
    rep.columns = ["vertex", "q_degree"]
    rep.rows = [[v, d] for v, d in enumerate(prof.per_vertex)]
    return rep


def _cmd_colorable(a, cfg) -> Report:
    g, h = parse_graph(a.graph), parse_graph(a.target)
    ok, witness = is_colorable(g, h)
    result = {"colorable": ok, "witness": witness, "graph": graph_ref(g), "target": graph_ref(h)}
    rep = Report("colorable", cfg, result)
    rep.summary = [("colorable", ok), ("witness", " ".join(map(str, witness)) if ok else None)]
    if a.distance:
        dist, coloring = edit_distance_to_colorable(g, h, cfg["caps"]["map_budget"])
        result.update(distance=dist, distance_coloring=coloring)
        rep.summary += [("distance", dist), ("coloring", " ".join(map(str, coloring)))]
    return rep


def _setup(a, cfg):
    return (Pattern.of(parse_graph(a.pattern)), [Pattern.of(f) for f in parse_family(a.forbid)],
            cfg["caps"]["order_cap"], cfg["workers"])


def _cmd_extremal(a, cfg) -> Report:
    q, fam, cap, workers = _setup(a, cfg)
    res = extremal_search(a.n, q, fam, cap=cap, witness_cap=a.witness_cap, workers=workers)
    rep = Report("extremal", cfg, {
        "n": a.n, "pattern": pattern_ref(q, a.pattern), "forbid": a.forbid,
        "value": res.value, "copies": res.copies, "density": rat(res.density),
        "witness_count": res.witness_count, "witnesses": [graph_ref(w) for w in res.witnesses],
        "graphs_scanned": res.graphs_scanned})
    rep.summary = [("n", a.n), ("inj", res.value), ("copies", res.copies),
                   ("density", res.density), ("witnesses", res.witness_count),
                   ("graphs scanned", res.graphs_scanned)]
    rep.columns = ["graph6", "edges", "cert"]
    rep.rows = [[to_graph6(w), w.edge_count, graph_ref(w)["cert"]] for w in res.witnesses]
    return rep


def _cmd_trend(a, cfg) -> Report:
    q, fam, cap, workers = _setup(a, cfg)
    results = density_trend(range(a.n_min, a.n + 1), q, fam, cap=cap, workers=workers)
    rows = [[r.n, r.value, r.copies, rat(r.density), r.graphs_scanned] for r in results]
    rep = Report("trend", cfg, {
        "pattern": pattern_ref(q, a.pattern), "forbid": a.forbid,
        "rows": [{"n": n, "inj": v, "copies": c, "density": d, "graphs_scanned": m}
                 for n, v, c, d, m in rows]})
    rep.summary = [("pattern", a.pattern), ("forbid", a.forbid)]
    rep.columns = ["n", "inj", "copies", "density", "graphs_scanned"]
    rep.rows = rows
    return rep


def _cmd_scan(a, cfg) -> Report:
    q, fam, cap, workers = _setup(a, cfg)
    h = parse_graph(a.target)
    res = degree_stability_scan(a.n, q, fam, h, cap=cap, workers=workers)
    table = [{"graph6": to_graph6(r.graph), "inj": r.inj, "min_q_degree": r.min_degree,
              "ratio": rat(r.ratio), "colorable": r.colorable} for r in res.rows]
    counter = [to_graph6(r.graph) for r in res.counterexamples]
    rep = Report("scan", cfg, {
        "n": a.n, "pattern": pattern_ref(q, a.pattern), "forbid": a.forbid, "target": a.target,
        "extremal_value": res.extremal_value, "critical_ratio": rat(res.critical_ratio),
        "finite_n_counterexamples": counter, "table": table})
    rep.summary = [("n", a.n), ("extremal inj", res.extremal_value), ("graphs", len(res.rows)),
                   ("critical ratio", res.critical_ratio), ("counterexamples", len(counter))]
    rep.columns = ["graph6", "inj", "min_q_degree", "ratio", "colorable"]
    rep.rows = [[t["graph6"], t["inj"], t["min_q_degree"], t["ratio"], t["colorable"]] for t in table]
    return rep


def _cmd_extend(a, cfg) -> Report:
    q, fam, cap, _ = _setup(a, cfg)
    h = parse_graph(a.target)
    if a.graph:
        g = parse_graph(a.graph)
        if g.n != a.n:
            raise SpecError(f"--graph has {g.n} vertices but --n is {a.n}")
        res = vertex_extendability_check(g, a.vertex, q, fam, h, a.ratio)
        found = [res]
        result = {"mode": "single", "graph": graph_ref(g), "vertex": a.vertex,
                  "extremal_value": res.extremal_value, "free": res.free,
                  "min_q_degree": res.min_degree, "degree_condition": res.degree_ok,
                  "deleted_colorable": res.deleted_colorable,
                  "hypothesis_met": res.hypothesis_met, "conclusion_holds": res.conclusion_holds}
        summary = [("hypothesis met", res.hypothesis_met), ("conclusion holds", res.conclusion_holds)]
    else:
        scan = vertex_extendability_scan(a.n, q, fam, h, a.ratio, cap=cap)
        found = scan.met
        result = {"mode": "batch", "extremal_value": scan.extremal_value,
                  "graphs_scanned": scan.graphs_scanned, "hypothesis_met_count": len(scan.met),
                  "violations": [{"graph6": to_graph6(r.graph), "vertex": r.vertex}
                                 for r in scan.violations],
                  "instances": [{"graph6": to_graph6(r.graph), "vertex": r.vertex,
                                 "conclusion_holds": r.conclusion_holds} for r in scan.met]}
        summary = [("graphs scanned", scan.graphs_scanned), ("hypothesis met", len(scan.met)),
                   ("violations", len(scan.violations))]
    result.update(n=a.n, pattern=pattern_ref(q, a.pattern), forbid=a.forbid, target=a.target,
                  ratio=rat(a.ratio))
    rep = Report("extend", cfg, result)
    rep.summary = summary
    rep.columns = ["graph6", "vertex", "hypothesis_met", "conclusion_holds"]
    rep.rows = [[to_graph6(r.graph), r.vertex, r.hypothesis_met, r.conclusion_holds] for r in found]
    return rep


def _cmd_edgestab(a, cfg) -> Report:
    q, fam, cap, workers = _setup(a, cfg)
    h = parse_graph(a.target)
    res = edge_stability_measure(a.n, q, fam, h, a.near, cap=cap,
                                 budget=cfg["caps"]["map_budget"], workers=workers)
    hist = {str(k): v for k, v in res.histogram.items()}
    rep = Report("edgestab", cfg, {
        "n": a.n, "pattern": pattern_ref(q, a.pattern), "forbid": a.forbid, "target": a.target,
        "near": rat(res.near), "extremal_value": res.extremal_value,
        "graphs": len(res.distances), "max_distance": res.max_distance,
        "max_distance_over_n2": rat(res.normalized_max), "histogram": hist})
    rep.summary = [("extremal inj", res.extremal_value), ("graphs", len(res.distances)),
                   ("max distance", res.max_distance), ("max / n^2", res.normalized_max)]
    rep.columns = ["distance", "graphs"]
    rep.rows = [[k, v] for k, v in res.histogram.items()]
    return rep


def _cmd_reference(a, cfg) -> Report:
    value = turan_degree_reference(a.n, a.r)
    rep = Report("reference", cfg, {"n": a.n, "r": a.r, "avg_c5_degree": rat(value)})
    rep.summary = [("avg C5-degree of T(n,r)", value)]
    return rep


def _cmd_generate(a, cfg) -> Report:
    if a.random:
        graphs = list(random_graphs(a.n, a.p, a.seed, a.count))
    else:
        graphs = list(all_graphs_filtered(a.n, parse_family(a.forbid), cap=cfg["caps"]["order_cap"]))
    rep = Report("generate", cfg, {"count": len(graphs), "graph6": [to_graph6(g) for g in graphs]})
    rep.summary = [("count", len(graphs))]
    rep.columns = ["graph6"]
    rep.rows = [[to_graph6(g)] for g in graphs]
    return rep


COMMANDS = {"count": _cmd_count, "degree": _cmd_degree, "colorable": _cmd_colorable,
            "extremal": _cmd_extremal, "trend": _cmd_trend, "scan": _cmd_scan, "extend": _cmd_extend,
            "edgestab": _cmd_edgestab, "reference": _cmd_reference, "generate": _cmd_generate}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = run_config(args)
        report = COMMANDS[args.command](args, cfg)
    except (OrderCapExceeded, BudgetExceeded) as exc:
        print(f"oddturan: {exc}", file=sys.stderr)
        return EXIT_CAP
    except CountOverflow as exc:
        print(f"oddturan: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (SpecError, GraphError, ValueError, OSError) as exc:
        print(f"oddturan: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = report.render(args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
