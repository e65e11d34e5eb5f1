"""Command-line front end.

Five subcommands: gen (random input graphs), embed (run the annealing
pipeline), verify (check a placement file), bench (threshold sweeps), and
bounds (capacity formulas). Exit codes: 0 success / verified minor embedding,
1 heuristic failure (no minor found or placement not an embedding), 2 usage
or input errors. Diagnostics go to stderr, machine output to files or stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .baseline import (clique_upper_bound, min_hardware_vertices,
                       min_supervertex_size)
from .bench import threshold_sweep
from .graphs import (GraphFormatError, gen_barabasi_albert,
                     gen_erdos_renyi_connected, gen_random_cubic, read_graph,
                     write_graph)
from .hardware import KingGraph
from .placement import load_placement, verify
from .pssa import (DEFAULT_BETA, DEFAULT_PA, DEFAULT_PS, DEFAULT_T0,
                   DEFAULT_T_HALF, DEFAULT_T_MAX, FAMILIES, ScheduleConfig,
                   run_pssa)

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_USAGE = 2

_CONFIG_FIELDS = ("family", "t_max", "T0", "T_half", "beta", "ps_start",
                  "ps_end", "pa_start", "pa_end", "score_scale")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="kingminor",
        description="Minor embedding of sparse graphs into king-move grid "
                    "hardware via swap-shift annealing.")
    sub = top.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a random input graph")
    g.add_argument("--type", required=True, choices=("cubic", "ba", "er"),
                   help="graph class: random cubic, Barabasi-Albert, or "
                        "connected Erdos-Renyi")
    g.add_argument("--n", required=True, type=int, help="vertex count")
    g.add_argument("--rho", type=float, default=0.2,
                   help="edge density for --type er (default 0.2)")
    g.add_argument("--m0", type=int, default=2,
                   help="seed clique size for --type ba (default 2)")
    g.add_argument("--m", type=int, default=2,
                   help="edges per new vertex for --type ba (default 2)")
    g.add_argument("--seed", required=True, type=int)
    g.add_argument("--out", required=True, help="output graph file")

    e = sub.add_parser("embed", help="find a minor embedding")
    e.add_argument("--graph", required=True, help="input graph file")
    e.add_argument("--L", required=True, type=int, help="hardware side length")
    _add_run_flags(e)
    e.add_argument("--out", required=True, help="output placement file (JSON)")

    v = sub.add_parser("verify", help="verify a placement file")
    v.add_argument("--graph", required=True)
    v.add_argument("--embedding", required=True, help="placement file (JSON)")
    v.add_argument("--L", required=True, type=int)

    b = sub.add_parser("bench", help="embedding-threshold sweep")
    b.add_argument("--class", dest="cls", required=True,
                   choices=("cubic", "ba", "er"))
    b.add_argument("--L", required=True,
                   help="comma-separated hardware sizes, e.g. 20,40")
    b.add_argument("--samples", type=int, default=20,
                   help="inputs per size point (default 20)")
    b.add_argument("--success", type=int, default=19,
                   help="successes required to keep growing n (default 19)")
    b.add_argument("--step", type=int, default=1,
                   help="vertex-count increment; >1 adds bisection refinement")
    b.add_argument("--rho", type=float, default=0.2)
    b.add_argument("--require-connected", action="store_true",
                   help="resample disconnected inputs (records discards)")
    b.add_argument("--workers", type=int, default=1,
                   help="parallel sample workers (reduction is order-fixed)")
    _add_run_flags(b)
    b.add_argument("--out", required=True, help="output CSV file")

    d = sub.add_parser("bounds", help="capacity bounds for one hardware size")
    d.add_argument("--L", required=True, type=int)
    d.add_argument("--d", type=int, default=8,
                   help="hardware coordination number (default 8, king grid)")
    d.add_argument("--N", type=int,
                   help="complete-graph size for the resource bounds "
                        "(default L+1)")
    return top


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tmax", type=int, default=None,
                   help=f"annealing iterations (default {DEFAULT_T_MAX})")
    p.add_argument("--schedule", choices=sorted(FAMILIES), default=None,
                   help="temperature family: s1/s2 linear double/single, "
                        "s3/s4 exponential double/single (default s3; "
                        f"T0={DEFAULT_T0}, T_half={DEFAULT_T_HALF}, "
                        f"beta={DEFAULT_BETA} per 1000 steps at the default "
                        f"budget, p_s {DEFAULT_PS[0]}->{DEFAULT_PS[1]}, "
                        f"p_a {DEFAULT_PA[0]}->{DEFAULT_PA[1]})")
    p.add_argument("--seed", type=int, default=None,
                   help="run seed (default 0)")
    p.add_argument("--degree-weighted", action="store_true",
                   help="bias shift direction by chain-size/degree ratios")
    p.add_argument("--no-terminal", action="store_true",
                   help="skip the terminal free-cell search phase")
    p.add_argument("--config", default=None,
                   help="JSON file with schedule fields and run flags; "
                        "command-line flags win")


def _load_config(args) -> tuple[ScheduleConfig, dict]:
    """Merge the optional config file with flags (flags win)."""
    doc = {}
    if getattr(args, "config", None):
        with open(args.config, "r", encoding="ascii") as fh:
            doc = json.load(fh)
        unknown = set(doc) - set(_CONFIG_FIELDS) - {
            "seed", "degree_weighted", "terminal"}
        if unknown:
            raise ValueError(f"unknown config fields: {sorted(unknown)}")
    fields = {k: doc[k] for k in _CONFIG_FIELDS if k in doc}
    if args.schedule is not None:
        fields["family"] = args.schedule
    if args.tmax is not None:
        fields["t_max"] = args.tmax
    run = {
        "seed": doc.get("seed", 0),
        "degree_weighted": doc.get("degree_weighted", False),
        "terminal": doc.get("terminal", True),
    }
    if args.seed is not None:
        run["seed"] = args.seed
    if args.degree_weighted:
        run["degree_weighted"] = True
    if args.no_terminal:
        run["terminal"] = False
    return ScheduleConfig(**fields), run


def _cmd_gen(args) -> int:
    if args.type == "cubic":
        graph = gen_random_cubic(args.n, args.seed)
    elif args.type == "ba":
        graph = gen_barabasi_albert(args.n, m0=args.m0, m=args.m,
                                    seed=args.seed)
    else:
        graph = gen_erdos_renyi_connected(args.n, args.rho, seed=args.seed)
    write_graph(graph, args.out)
    print(f"wrote {args.type} graph n={graph.n} m={graph.m} to {args.out}")
    return EXIT_OK


def _cmd_embed(args) -> int:
    config, run = _load_config(args)
    graph = read_graph(args.graph)
    king = KingGraph(args.L)
    placement, report = run_pssa(
        graph, king, config, seed=run["seed"],
        degree_weighted=run["degree_weighted"], terminal=run["terminal"])
    placement.save(args.out)
    sys.stdout.write(report.to_text())
    return EXIT_OK if report.found else EXIT_NOT_FOUND


def _cmd_verify(args) -> int:
    graph = read_graph(args.graph)
    king = KingGraph(args.L)
    placement = load_placement(args.embedding, graph, king)
    result = verify(placement, graph, king)
    if result.is_minor_embedding:
        print(f"valid minor embedding: {graph.m} edges represented on "
              f"{int((placement.label >= 0).sum())} cells")
        return EXIT_OK
    for violation in result.violations:
        print(f"{violation.kind}: {violation.detail}")
    return EXIT_NOT_FOUND


def _cmd_bench(args) -> int:
    config, run = _load_config(args)
    try:
        L_list = [int(part) for part in args.L.split(",") if part]
    except ValueError:
        raise ValueError(f"--L expects comma-separated integers, got {args.L!r}")
    report = threshold_sweep(
        args.cls, L_list, config, step=args.step, seed=run["seed"],
        samples=args.samples, success_cut=args.success,
        degree_weighted=run["degree_weighted"], terminal=run["terminal"],
        rho=args.rho, require_connected=args.require_connected,
        workers=args.workers)
    with open(args.out, "w", encoding="ascii") as fh:
        fh.write(report.to_csv())
    sys.stdout.write(report.to_text())
    return EXIT_OK


def _cmd_bounds(args) -> int:
    L = args.L
    if L < 1:
        raise ValueError("L must be >= 1")
    N = args.N if args.N is not None else L + 1
    doc = {
        "L": L,
        "clique_upper_bound": clique_upper_bound(L),
        "treewidth_bound": 2 * L - 1,
        "N": N,
        "d": args.d,
        "min_hardware_vertices": min_hardware_vertices(N, args.d),
        "min_supervertex_size": min_supervertex_size(N, args.d),
    }
    print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK


_COMMANDS = {
    "gen": _cmd_gen,
    "embed": _cmd_embed,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
    "bounds": _cmd_bounds,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, GraphFormatError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
