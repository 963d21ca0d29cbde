"""Command-line front end: compute, sweep, exact, verify, and gen.

Exit codes: 0 success, 1 failed verification, 2 usage or input errors,
3 guard violations. The environment variable LAPMU_MAXCUT_GUARD overrides
the brute-force max-cut vertex guard.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import analysis, oracles, solvers
from .graph import FORMATS, Graph, GraphFormatError, format_edge_list, generate, parse_graph

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


def _fmt(value: float) -> str:
    if math.isinf(value):
        return "inf"
    return format(float(value), ".17g")


def _parse_p(text: str) -> float:
    if text.strip().lower() == "inf":
        return math.inf
    try:
        p = float(text)
    except ValueError:
        raise ValueError(f"p must be a decimal number or 'inf', got {text!r}") from None
    if not p >= 1.0:
        raise ValueError(f"p must be >= 1, got {p}")
    return p


def _maxcut_guard() -> int:
    raw = os.environ.get("LAPMU_MAXCUT_GUARD")
    if raw is None:
        return oracles.DEFAULT_MAXCUT_GUARD
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"LAPMU_MAXCUT_GUARD must be an integer, got {raw!r}") from None


def _load_graph(args) -> Graph:
    if args.gen is not None:
        return generate(args.gen)
    text = Path(args.graph).read_text()
    return parse_graph(text, args.format)


def _solver_config(args) -> solvers.SolverConfig:
    return solvers.SolverConfig(
        tol=args.tol,
        max_iter=args.max_iter,
        restarts=args.restarts,
        seed=args.seed,
        step=args.step,
    )


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _cmd_compute(args) -> int:
    g = _load_graph(args)
    p = _parse_p(args.p)
    if p == 1.0:
        value = float(oracles.mu_one(g))
        x = np.zeros(g.n)
        x[int(np.argmax(g.degree_array))] = 1.0
        line = f"p=1 value={_fmt(value)} method={analysis.METHOD_EXACT_DEGREE}"
        print("note: p=1 is exact (maximum degree); no iterative solve performed", file=sys.stderr)
    elif p == 2.0:
        est = oracles.lap_top_eigenpair(g)
        x = est.vector
        line = (
            f"p=2 value={_fmt(est.value)} method={analysis.METHOD_EXACT_EIGEN} "
            f"iterations={est.iterations}"
        )
    elif p == math.inf:
        cut = oracles.max_cut_bruteforce(g, _maxcut_guard())
        x = np.where(np.asarray(cut.side_mask), 1.0, -1.0)
        line = (
            f"p=inf value={_fmt(4.0 * cut.cut_size)} method={analysis.METHOD_EXACT_MAXCUT} "
            f"cut={cut.cut_size}"
        )
    else:
        est = solvers.multistart(g, p, _solver_config(args))
        x = est.x
        line = (
            f"p={_fmt(p)} value={_fmt(est.value)} method={analysis.solver_method(p)} "
            f"residual={_fmt(est.residual)} iterations={est.iterations}"
        )
    text = line + "\n"
    if args.vector:
        text += "".join(f"{_fmt(float(entry))}\n" for entry in x)
    _write_output(text, args.output)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    g = _load_graph(args)
    try:
        grid = [float(t) for t in args.grid.split(",") if t.strip()]
    except ValueError:
        raise ValueError(f"bad grid {args.grid!r}: expected comma-separated decimals") from None
    rows = analysis.sweep(g, grid, _solver_config(args), maxcut_guard=_maxcut_guard())
    _write_output(analysis.sweep_csv(rows), args.output)
    return EXIT_OK


def _cmd_exact(args) -> int:
    g = _load_graph(args)
    if args.degree:
        d = oracles.mu_one(g)
        line = f"max_degree={d} mu_1={d}"
    elif args.maxcut:
        cut = oracles.max_cut_bruteforce(g, _maxcut_guard())
        line = f"cut={cut.cut_size} mu_inf={4 * cut.cut_size}"
    elif args.eigen:
        est = oracles.lap_top_eigenpair(g)
        line = f"mu_2={_fmt(est.value)}"
    else:
        flag = oracles.has_spanning_balanced_biclique(g)
        line = f"balanced_biclique={'true' if flag else 'false'}"
    _write_output(line + "\n", args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _load_graph(args)
    report = analysis.verify_theorems(g, _solver_config(args), maxcut_guard=_maxcut_guard())
    _write_output(analysis.render_report(report), args.output)
    if args.json is not None:
        Path(args.json).write_text(json.dumps(analysis.report_json(report), indent=2) + "\n")
    return EXIT_OK if report.passed() else EXIT_VERIFY_FAILED


def _cmd_gen(args) -> int:
    g = generate(args.spec)
    _write_output(format_edge_list(g), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    source = argparse.ArgumentParser(add_help=False)
    group = source.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph", metavar="PATH", help="graph file to read")
    group.add_argument(
        "--gen", metavar="SPEC", help="generator spec, e.g. complete:5 or random:10,0.5,42"
    )
    source.add_argument(
        "--format", choices=FORMATS, default="edge-list", help="input file format"
    )

    solver = argparse.ArgumentParser(add_help=False)
    solver.add_argument("--tol", type=float, default=1e-12, help="value-change tolerance")
    solver.add_argument("--max-iter", type=int, default=10000, help="iteration cap per start")
    solver.add_argument("--restarts", type=int, default=16, help="multistart count")
    solver.add_argument("--seed", type=int, default=0, help="RNG seed for the starts")
    solver.add_argument("--step", type=float, default=0.1, help="initial gradient step")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--output", metavar="PATH", help="write primary output here (default stdout)")

    parser = argparse.ArgumentParser(
        prog="lapmu",
        description="Laplacian p-spectral radius: iterative solvers and exact oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser(
        "compute", parents=[source, solver, output], help="estimate mu at one p"
    )
    compute.add_argument("--p", required=True, help='p value: a decimal >= 1 or "inf"')
    compute.add_argument("--vector", action="store_true", help="also print the maximizer entries")
    compute.set_defaults(func=_cmd_compute)

    swp = sub.add_parser(
        "sweep", parents=[source, solver, output], help="CSV sweep of mu over a p grid"
    )
    swp.add_argument(
        "--grid",
        default=",".join(_fmt(p) for p in analysis.DEFAULT_GRID),
        help="comma-separated p values in (1, inf)",
    )
    swp.set_defaults(func=_cmd_sweep)

    exact = sub.add_parser("exact", parents=[source, output], help="run one exact oracle")
    which = exact.add_mutually_exclusive_group(required=True)
    which.add_argument("--degree", action="store_true", help="mu at p=1 (maximum degree)")
    which.add_argument("--maxcut", action="store_true", help="mu at p=inf (4 * maximum cut)")
    which.add_argument("--eigen", action="store_true", help="mu at p=2 (top Laplacian eigenvalue)")
    which.add_argument(
        "--biclique", action="store_true", help="spanning balanced biclique certificate"
    )
    exact.set_defaults(func=_cmd_exact)

    verify = sub.add_parser(
        "verify", parents=[source, solver, output], help="run every theorem check on the graph"
    )
    verify.add_argument("--json", metavar="PATH", help="also write the report as JSON")
    verify.set_defaults(func=_cmd_verify)

    gen = sub.add_parser("gen", parents=[output], help="write a generated graph as an edge list")
    gen.add_argument("spec", help="generator spec, e.g. complete_bipartite:2,3")
    gen.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except oracles.GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
