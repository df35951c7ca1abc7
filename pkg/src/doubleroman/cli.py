"""Command-line front end: generate, inspect, export, solve, approximate, benchmark.

Primary results go to stdout and are byte-stable across runs; wall-clock
timings go to stderr or into dedicated CSV columns so they never perturb
the reproducible output.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import __version__
from .formulations import FormulationKind, build_formulation, compute_bounds
from .graphs import (
    Graph,
    compute_params,
    generate_gnp,
    generate_grid,
    generate_random_tree,
    load_graph,
    save_graph,
)
from .greedy import PROBLEM_DRDP, PROBLEM_RDP, build_covering, greedy
from .model import export_lp
from .oracle import Codomain, Quantity, exact, is_drdf, is_rdf
from .solver import STATUS_OPTIMAL, STATUS_TIME_LIMIT, SolverConfig, solve_formulation

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_TIME_LIMIT_NO_INCUMBENT = 4

_KIND_BY_NAME = {k.value: k for k in FormulationKind}


@dataclass
class BenchRecord:
    instance: str
    n: int
    m: int
    method: str
    result: str
    status: str
    nodes: str
    seed: str
    time_s: float

    def row(self) -> list[str]:
        return [
            self.instance,
            str(self.n),
            str(self.m),
            self.method,
            self.result,
            self.status,
            self.nodes,
            self.seed,
            f"{self.time_s:.2f}",
        ]


_CSV_HEADER = ["instance", "n", "m", "method", "result", "status", "nodes", "seed", "time_s"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doubleroman",
        description="Exact and approximate double Roman domination solvers",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance and write it as an edge list")
    gensub = gen.add_subparsers(dest="family", required=True)
    g_grid = gensub.add_parser("grid")
    g_grid.add_argument("rows", type=int)
    g_grid.add_argument("cols", type=int)
    g_gnp = gensub.add_parser("gnp")
    g_gnp.add_argument("n", type=int)
    g_gnp.add_argument("p", type=float)
    g_gnp.add_argument("--seed", type=int, default=1)
    g_tree = gensub.add_parser("tree")
    g_tree.add_argument("n", type=int)
    g_tree.add_argument("--seed", type=int, default=1)
    for p in (g_grid, g_gnp, g_tree):
        p.add_argument("-o", "--output", required=True)

    params = sub.add_parser("params", help="structural parameters of a graph")
    params.add_argument("file")

    bounds = sub.add_parser("bounds", help="bound constants used by the strengthened models")
    bounds.add_argument("file")

    model = sub.add_parser("model", help="write a formulation as an LP file")
    model.add_argument("file")
    model.add_argument("--formulation", required=True, choices=sorted(_KIND_BY_NAME))
    model.add_argument("--strengthen", action="store_true")
    model.add_argument("-o", "--output", required=True)

    solve_p = sub.add_parser("solve", help="solve a graph exactly via branch-and-bound")
    solve_p.add_argument("file")
    solve_p.add_argument("--formulation", required=True, choices=sorted(_KIND_BY_NAME))
    solve_p.add_argument("--strengthen", action="store_true")
    solve_p.add_argument("--time-limit", type=float, default=300.0)
    solve_p.add_argument("--no-integral-prune", action="store_true")

    greedy_p = sub.add_parser("greedy", help="greedy covering approximation")
    greedy_p.add_argument("file")
    greedy_p.add_argument("--problem", required=True, choices=[PROBLEM_DRDP, PROBLEM_RDP])

    oracle_p = sub.add_parser("oracle", help="brute-force optimum (small graphs)")
    oracle_p.add_argument("file")
    oracle_p.add_argument(
        "--quantity", required=True, choices=[q.value for q in Quantity]
    )
    oracle_p.add_argument("--codomain", choices=[c.value for c in Codomain])

    bench = sub.add_parser("bench", help="run a benchmark suite and emit tables")
    bench.add_argument("--suite", required=True, choices=["grid", "gnp", "tree", "corpus"])
    bench.add_argument("--jobs", type=int, default=1)
    bench.add_argument("--csv", dest="csv_path")
    bench.add_argument("--md", dest="md_path")
    bench.add_argument("--seed", type=int, default=1)
    bench.add_argument("--time-limit", type=float, default=300.0)
    return parser


def _cmd_gen(args) -> int:
    if args.family == "grid":
        g = generate_grid(args.rows, args.cols)
        name = f"Grid{args.rows:02d}x{args.cols:02d}"
    elif args.family == "gnp":
        g = generate_gnp(args.n, args.p, args.seed)
        name = f"Gnp-{args.n}-{args.p}-s{args.seed}"
    else:
        g = generate_random_tree(args.n, args.seed)
        name = f"Tree-{args.n}-s{args.seed}"
    save_graph(g, args.output)
    print(f"{name} n {g.n} m {g.m} -> {args.output}")
    return EXIT_OK


def _cmd_params(args) -> int:
    params = compute_params(load_graph(args.file))
    print(f"n {params.n}")
    print(f"m {params.m}")
    print(f"max_degree {params.max_degree}")
    print(f"min_degree {params.min_degree}")
    print(f"connected {'yes' if params.connected else 'no'}")
    print(f"diameter {params.diameter if params.diameter is not None else 'disconnected'}")
    print(f"girth {params.girth if params.girth is not None else 'acyclic'}")
    return EXIT_OK


def _cmd_bounds(args) -> int:
    bounds = compute_bounds(compute_params(load_graph(args.file)))
    for label, value in [
        ("L1", bounds.l1),
        ("L2", bounds.l2),
        ("L3", bounds.l3),
        ("U1", bounds.u1),
        ("U2", bounds.u2),
        ("gamma_lb", bounds.gamma_lb),
    ]:
        print(f"{label} {value if value is not None else 'absent'}")
    return EXIT_OK


def _cmd_model(args) -> int:
    g = load_graph(args.file)
    kind = _KIND_BY_NAME[args.formulation]
    bounds = compute_bounds(compute_params(g)) if args.strengthen else None
    model = build_formulation(g, kind, bounds=bounds, strengthen=args.strengthen)
    text = export_lp(model)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(
        f"{model.metadata['formulation']} model: {len(model.variables)} variables, "
        f"{len(model.constraints)} constraints -> {args.output}"
    )
    return EXIT_OK


def _cmd_solve(args) -> int:
    g = load_graph(args.file)
    kind = _KIND_BY_NAME[args.formulation]
    cfg = SolverConfig(time_limit=args.time_limit)
    started = time.perf_counter()
    result, labeling = solve_formulation(
        g, kind, strengthen=args.strengthen, cfg=cfg,
        integral_prune=not args.no_integral_prune,
    )
    elapsed = time.perf_counter() - started
    if result.status == STATUS_TIME_LIMIT and result.objective is None:
        print("time limit reached without an incumbent", file=sys.stderr)
        return EXIT_TIME_LIMIT_NO_INCUMBENT
    if labeling is not None:
        if not is_drdf(g, labeling):
            raise RuntimeError("extracted labeling failed re-verification")
        print(f"objective {labeling.weight}")
        print(f"status {result.status}")
        print(f"labeling {' '.join(str(v) for v in labeling.values)}")
    else:
        print(f"objective {result.objective:g}")
        print(f"status {result.status}")
        print(f"best_bound {result.best_bound:g}")
    print(f"nodes {result.nodes}")
    print(f"time {elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK


def _cmd_greedy(args) -> int:
    g = load_graph(args.file)
    inst = build_covering(g, args.problem)
    res = greedy(inst)
    checker = is_drdf if args.problem == PROBLEM_DRDP else is_rdf
    if not checker(g, res.labeling):
        raise RuntimeError("greedy labeling failed re-verification")
    print(f"W1 {res.w1} W2 {res.w2}")
    print(f"labeling {' '.join(str(v) for v in res.labeling.values)}")
    print(f"ratio_bound {res.ratio_bound:.4f}")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = load_graph(args.file)
    quantity = Quantity(args.quantity)
    codomain = Codomain(args.codomain) if args.codomain else None
    value, certificate = exact(g, quantity, codomain)
    print(value)
    if quantity is Quantity.GAMMA:
        print(f"certificate {' '.join(str(v) for v in sorted(certificate))}")
    else:
        print(f"certificate {' '.join(str(v) for v in certificate.values)}")
    return EXIT_OK


def _bench_instances(suite: str, seed: int):
    """(name, graph, seed-label) triples for a suite; corpus mirrors the test corpus."""
    if suite == "grid":
        for rows, cols in [(5, 10), (5, 15), (10, 10)]:
            yield f"Grid{rows:02d}x{cols:02d}", generate_grid(rows, cols), "-"
    elif suite == "gnp":
        for n in (20, 30):
            for p in (0.2, 0.5, 0.8):
                for s in range(seed, seed + 3):
                    yield f"Gnp-{n}-{p}-s{s}", generate_gnp(n, p, s), str(s)
    elif suite == "tree":
        for n in (50, 100, 200):
            for s in range(seed, seed + 3):
                yield f"Tree-{n}-s{s}", generate_random_tree(n, s), str(s)
    else:
        from .corpus import corpus_graphs

        for name, g in corpus_graphs():
            yield name, g, "-"


def _bench_methods(suite: str):
    methods = [k.value for k in FormulationKind]
    methods += ["drdp1p+", "drdp2p+", "greedy"]
    if suite == "corpus":
        methods.append("oracle")
    return methods


def _run_bench_task(task):
    name, graph_text, method, time_limit = task
    from .graphs import from_edge_list

    g = from_edge_list(graph_text)
    started = time.perf_counter()
    if method == "greedy":
        res = greedy(build_covering(g, PROBLEM_DRDP))
        elapsed = time.perf_counter() - started
        return name, g.n, g.m, method, str(res.w2), "feasible", "-", elapsed
    if method == "oracle":
        value, _ = exact(g, Quantity.GAMMA_DR)
        elapsed = time.perf_counter() - started
        return name, g.n, g.m, method, str(value), "optimal", "-", elapsed
    strengthen = method.endswith("+")
    kind = _KIND_BY_NAME[method.rstrip("+")]
    result, labeling = solve_formulation(
        g, kind, strengthen=strengthen, cfg=SolverConfig(time_limit=time_limit)
    )
    elapsed = time.perf_counter() - started
    value = labeling.weight if labeling is not None else result.objective
    return (
        name,
        g.n,
        g.m,
        method,
        "-" if value is None else f"{value:g}",
        result.status,
        str(result.nodes),
        elapsed,
    )


def _cmd_bench(args) -> int:
    from .graphs import to_edge_list

    tasks = []
    meta = {}
    for name, g, seed_label in _bench_instances(args.suite, args.seed):
        meta[name] = seed_label
        for method in _bench_methods(args.suite):
            tasks.append((name, to_edge_list(g), method, args.time_limit))

    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            raw = list(pool.map(_run_bench_task, tasks))
    else:
        raw = [_run_bench_task(t) for t in tasks]

    records = [
        BenchRecord(name, n, m, method, result, status, nodes, meta[name], elapsed)
        for name, n, m, method, result, status, nodes, elapsed in raw
    ]
    records.sort(key=lambda r: (r.instance, r.method))

    widths = [24, 10, 8, 10, 6]
    print(f"{'instance':24s} {'method':10s} {'result':8s} {'status':10s} {'nodes':6s}")
    for rec in records:
        print(f"{rec.instance:24s} {rec.method:10s} {rec.result:8s} {rec.status:10s} {rec.nodes:6s}")

    if args.csv_path:
        with open(args.csv_path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(_CSV_HEADER)
            for rec in records:
                writer.writerow(rec.row())
    if args.md_path:
        with open(args.md_path, "w", encoding="utf-8") as fh:
            fh.write("| " + " | ".join(_CSV_HEADER) + " |\n")
            fh.write("|" + "---|" * len(_CSV_HEADER) + "\n")
            for rec in records:
                fh.write("| " + " | ".join(rec.row()) + " |\n")
    return EXIT_OK


_HANDLERS = {
    "gen": _cmd_gen,
    "params": _cmd_params,
    "bounds": _cmd_bounds,
    "model": _cmd_model,
    "solve": _cmd_solve,
    "greedy": _cmd_greedy,
    "oracle": _cmd_oracle,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
