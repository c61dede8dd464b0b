"""Command-line interface: ``hfree {kernelize,solve,verify,gen,bound}``.

Exit codes: 0 success, 1 verification disagreement, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from pathlib import Path

from hfree.fileio import ParseError, load_family, read_graph, serialize_graph
from hfree.generators import gen_bounded_degree, gen_clique_free
from hfree.graph import max_degree
from hfree.harness import MODES, GuardExceeded, RunReport, campaign_graph, kernelize, run_campaign, verify_equivalence
from hfree.kernel import (
    INT64_MAX,
    KernelParams,
    kernel_bound_rule0,
    kernel_bound_rule1,
    rule0_radius,
    rule0_threshold,
    rule1_radius,
    rule1_threshold,
)
from hfree.ramsey import degree_cap
from hfree.solver import ProblemInstance, solve_branching, solve_bruteforce

SEED_ENV = "HFREE_SEED"
EXIT_OK, EXIT_DISAGREE, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("hfree")


def _default_seed() -> int:
    return int(os.environ.get(SEED_ENV, "0"))


def _emit(obj, out: str | None = None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_kernelize(args) -> int:
    g = read_graph(args.graph)
    fam = load_family(args.family)
    start = time.perf_counter()
    result = kernelize(ProblemInstance(g, args.k), fam, args.mode, args.t, args.s)
    elapsed = time.perf_counter() - start
    report = RunReport(args.mode, fam.label(), g.num_vertices, g.num_edges, max_degree(g), t=args.t, s=args.s)
    row = result.to_dict()
    row["k"] = args.k
    report.rows.append(row)
    report.timings = {"kernelize_s": elapsed}
    if args.out:
        Path(args.out).write_bytes(serialize_graph(result.instance.graph))
    _emit(report.to_dict(), args.report)
    return EXIT_OK


def cmd_solve(args) -> int:
    g = read_graph(args.graph)
    fam = load_family(args.family)
    inst = ProblemInstance(g, args.k)
    solver = solve_branching if args.engine == "branch" else solve_bruteforce
    sol = solver(inst, fam)
    _emit({
        "engine": args.engine,
        "k": args.k,
        "answer": sol is not None,
        "edges": sorted(sol.edges) if sol else None,
        "optimal": sol.optimal if sol else None,
    })
    return EXIT_OK


def _write_reproducer(directory: Path, report: RunReport, graph_text: bytes, row: dict) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"reproducer-{report.mode}-seed{report.seed}-k{row['k']}.json"
    path.write_text(json.dumps({
        "graph": graph_text.decode("ascii"),
        "family": report.family,
        "mode": report.mode,
        "t": report.t,
        "s": report.s,
        "k": row["k"],
        "seed": report.seed,
    }, indent=2))
    return path


def cmd_verify(args) -> int:
    fam = load_family(args.family)
    if args.graph:
        g = read_graph(args.graph)
        reports = [verify_equivalence(g, fam, args.mode, t=args.t, k_max=args.k_max, s=args.s)]
        graphs = {None: g}
    else:
        if args.family.startswith("@"):
            raise ValueError("seeded campaigns take builtin family names")
        seeds = range(args.seed, args.seed + args.seeds)
        reports = run_campaign(args.mode, args.family, seeds, t=args.t, s=args.s,
                               k_cap=args.k_max, max_n=args.max_n, jobs=args.jobs)
        graphs = {}
    failed = False
    for report in reports:
        for row in report.disagreements():
            failed = True
            if report.seed is not None and report.seed not in graphs:
                graphs[report.seed] = campaign_graph(report.mode, report.seed, args.max_n)
            path = _write_reproducer(Path(args.reproducer_dir), report, serialize_graph(graphs[report.seed]), row)
            log.error("disagreement at k=%d (seed %s); reproducer written to %s", row["k"], report.seed, path)
    summary = {
        "schema_version": reports[0].schema_version if reports else None,
        "instances": len(reports),
        "checks": sum(len(r.rows) for r in reports),
        "disagreements": sum(len(r.disagreements()) for r in reports),
        "reports": [r.to_dict() for r in reports] if args.full else None,
    }
    _emit(summary, args.report)
    return EXIT_DISAGREE if failed else EXIT_OK


def cmd_gen(args) -> int:
    seed = _default_seed() if args.seed is None else args.seed
    if args.kind == "bounded":
        g = gen_bounded_degree(args.n, args.delta, args.p, seed)
    else:
        g = gen_clique_free(args.n, args.t, args.p, seed)
    data = serialize_graph(g)
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.write(data.decode("ascii"))
    return EXIT_OK


def cmd_bound(args) -> int:
    if args.mode == "bounded":
        if args.delta is None:
            raise ValueError("bounded mode needs --delta")
        delta = args.delta
    else:
        if args.delta is not None:
            delta = args.delta
        elif args.s is not None and args.t is not None:
            delta = max(degree_cap(args.s, args.t), 2)
        else:
            raise ValueError("ktfree mode needs --delta (d) or both --s and --t")
    params = KernelParams(delta, args.diameter, args.k)
    if args.mode == "bounded":
        value = kernel_bound_rule0(params)
        threshold, radius = rule0_threshold(params), rule0_radius(params)
    else:
        value = kernel_bound_rule1(params)
        threshold, radius = rule1_threshold(params), rule1_radius(params)
    _emit({
        "mode": args.mode,
        "delta": delta,
        "diameter": args.diameter,
        "k": args.k,
        "exponent_p": params.exponent_p,
        "threshold": threshold,
        "radius": radius,
        "bound": value,
        "bound_saturated": value >= INT64_MAX,
    })
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hfree", description="Kernelization for H-free Edge Deletion.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kernelize", help="apply Rule 0 or Rule 1 and report")
    p.add_argument("--graph", required=True)
    p.add_argument("--family", required=True, help='builtin names like "K3,K1,3" or @file')
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default="bounded")
    p.add_argument("--t", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--out", help="write the kernel graph here")
    p.add_argument("--report", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("solve", help="solve exactly")
    p.add_argument("--graph", required=True)
    p.add_argument("--family", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--engine", choices=("branch", "brute"), default="branch")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="compare brute-force answers before and after kernelization")
    p.add_argument("--family", required=True)
    p.add_argument("--mode", choices=MODES, default="bounded")
    p.add_argument("--t", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--graph", help="verify one graph instead of a seeded campaign")
    p.add_argument("--k-max", type=int, default=None,
                   help="largest k checked (default: |E| for campaigns, 3 for --graph)")
    p.add_argument("--seeds", type=int, default=100)
    p.add_argument("--seed", type=int, default=None, help=f"first seed (default ${SEED_ENV} or 0)")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--reproducer-dir", default="reproducers")
    p.add_argument("--full", action="store_true", help="include every per-instance report")
    p.add_argument("--report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a seeded random graph")
    p.add_argument("--kind", choices=("bounded", "ktfree"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, default=3)
    p.add_argument("--t", type=int, default=4)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bound", help="print thresholds and kernel size bounds")
    p.add_argument("--mode", choices=("bounded", "ktfree"), default="bounded")
    p.add_argument("--delta", type=int, help="Delta (bounded) or d (ktfree)")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--diameter", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_bound)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.command == "verify":
        if args.seed is None:
            args.seed = _default_seed()
        if args.k_max is None and args.graph:
            args.k_max = 3
    try:
        return args.func(args)
    except (ParseError, GuardExceeded, ValueError, OSError) as exc:
        print(f"hfree: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
