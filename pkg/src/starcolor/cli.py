"""Command-line entry point: ``starcolor <command> ...``.

Exit codes: 0 success, 2 refused input, 3 verification failure,
4 search budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .cactus import NotLightCactus, color_light_cactus, light_cactus
from .exact import LimitExceeded, SolverConfig, conjecture_bound, scan_conjecture, star_chromatic_index
from .generators import FAMILIES, GenSpec, generate, random_outerplanar
from .graph import GraphError, InternalContradiction, Multigraph, ParseError, format_graph, outerplanar_embed, parse_graph
from .outerplanar import color_outerplanar, outerplanar_bound
from .subcubic import color_subcubic
from .trees import color_tree_graph, tree_palette
from .verify import EdgeColoring, check_edge_ids, check_proper, format_coloring, parse_coloring, verify_boundary_star, verify_star

EXIT_OK, EXIT_REFUSED, EXIT_VERIFY, EXIT_LIMIT = 0, 2, 3, 4

ALGORITHMS = ("tree", "outerplanar", "subcubic", "cactus")


@dataclass
class RunReport:
    instance: str
    algorithm: str
    colors_used: int
    bound: int
    verified: bool
    seconds: float
    nodes: int | None = None


BOUND_FORMULA = {"tree": "⌊3Δ/2⌋", "outerplanar": "⌊3Δ/2⌋+12", "subcubic": "5", "cactus": "4"}


def algorithm_bound(algo: str, delta: int) -> int:
    if algo == "tree":
        return tree_palette(delta)
    if algo == "outerplanar":
        return outerplanar_bound(delta)
    if algo == "subcubic":
        return 5
    return 4


def run_algorithm(g: Multigraph, algo: str) -> tuple[EdgeColoring, list[str]]:
    """Color ``g`` and re-verify from scratch; returns the violations found."""
    if algo == "tree":
        if not g.is_connected() or not g.is_forest():
            raise GraphError("tree algorithm needs a connected acyclic graph")
        col = color_tree_graph(g) if g.m else EdgeColoring(0, {})
    elif algo == "outerplanar":
        if not g.is_simple():
            raise GraphError("outerplanar algorithm needs a simple graph")
        col = color_outerplanar(g)
    elif algo == "subcubic":
        col = color_subcubic(g)
    elif algo == "cactus":
        lc = light_cactus(outerplanar_embed(g))
        col = color_light_cactus(lc)
        problems = [str(v) for v in check_proper(g, col)]
        problems += [str(v) for v in verify_boundary_star(lc.emb, col)]
        return col, problems
    else:
        raise ValueError(f"unknown algorithm {algo!r}")
    verdict = verify_star(g, col)
    problems = [f"uncolored edge {e}" for e in verdict.uncolored]
    problems += [str(v) for v in verdict.violations]
    return col, problems


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _config(args: argparse.Namespace) -> SolverConfig:
    return SolverConfig(node_limit=args.node_limit, time_limit=args.time_limit, seed=args.seed)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    params = {}
    for key in ("n", "delta", "a", "b", "blocks"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    try:
        g = generate(GenSpec(args.family, params, args.seed))
    except KeyError as exc:
        print(f"error: family {args.family} needs --{exc.args[0]}", file=sys.stderr)
        return EXIT_REFUSED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    _write(args.output, format_graph(g))
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    try:
        g = parse_graph(_read(args.graph))
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    start = time.perf_counter()
    try:
        col, problems = run_algorithm(g, args.algo)
    except NotLightCactus as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except GraphError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except InternalContradiction as exc:
        print(f"VERIFICATION FAILURE: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    delta = g.max_degree()
    report = RunReport(args.graph, args.algo, col.colors_used(), algorithm_bound(args.algo, delta),
                       not problems, time.perf_counter() - start)
    lines = [format_coloring(col).rstrip("\n")]
    lines.append(f"palette {col.palette_size}")
    lines.append(f"bound {BOUND_FORMULA[args.algo]} = {report.bound}")
    lines.append(f"colors-used {report.colors_used}")
    lines.append(f"c algorithm {report.algorithm} delta {delta} time {report.seconds:.3f}s")
    lines.append(f"c verify {'ok' if report.verified else 'FAILED'}")
    _write(args.output, "\n".join(lines) + "\n")
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        print("VERIFICATION FAILURE: coloring did not pass re-verification", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        g = parse_graph(_read(args.graph))
        col = parse_coloring(_read(args.coloring))
        check_edge_ids(g, col)
    except (OSError, ParseError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    missing = col.missing(g)
    if missing:
        print(f"error: partial coloring, uncolored edges {' '.join(map(str, missing))}", file=sys.stderr)
        return EXIT_REFUSED
    verdict = verify_star(g, col)
    for v in verdict.violations:
        print(v)
    if verdict.ok:
        print("ok")
        return EXIT_OK
    return EXIT_VERIFY


def cmd_exact(args: argparse.Namespace) -> int:
    try:
        g = parse_graph(_read(args.graph))
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    try:
        k, col = star_chromatic_index(
            g, _config(args), on_unsat=lambda r: print(f"UNSAT k={r.k}"), max_colors=args.max_colors
        )
    except LimitExceeded as exc:
        print(f"LIMIT lower={exc.lower} upper={exc.upper} nodes={exc.nodes}")
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"UNSAT {exc}")
        return EXIT_LIMIT
    print(f"k={k}")
    sys.stdout.write(format_coloring(col))
    return EXIT_OK


@dataclass(frozen=True)
class BenchRow:
    instance: str
    delta: int
    algorithm: str
    colors: int
    bound: int
    exact: int | None

    @property
    def slack(self) -> int | None:
        return None if self.exact is None else self.bound - self.exact


def _suite(name: str, seed: int) -> Iterator[tuple[str, Multigraph, str]]:
    from . import generators as gen

    if name == "spiders":
        for d in (3, 4):
            yield f"spider({d})", gen.spider(d), "tree"
    elif name == "paths-cycles":
        for n in range(3, 10):
            yield f"P{n}", gen.path(n), "tree"
        for n in range(3, 10):
            yield f"C{n}", gen.cycle(n), "subcubic"
    elif name == "subcubic":
        yield "c5_pendants", gen.c5_pendants(), "subcubic"
        for i in range(10):
            n = 4 + i % 6
            yield f"subcubic-n{n}-s{seed + i}", gen.random_subcubic_outerplanar(n, seed + i), "subcubic"
    else:
        raise ValueError(f"unknown suite {name!r}")


SUITES = ("spiders", "paths-cycles", "subcubic")


def bench_rows(suite: str, cfg: SolverConfig, seed: int = 0) -> list[BenchRow]:
    rows = []
    for name, g, algo in _suite(suite, seed):
        col, problems = run_algorithm(g, algo)
        if problems:
            raise InternalContradiction(f"{name}: {problems[0]}")
        try:
            exact, _ = star_chromatic_index(g, cfg)
        except LimitExceeded:
            exact = None
        rows.append(BenchRow(name, g.max_degree(), algo, col.colors_used(),
                             algorithm_bound(algo, g.max_degree()), exact))
    return rows


def format_rows(header: list[str], rows: list[list[object]], fmt: str) -> str:
    cells = [[("" if x is None else str(x)) for x in r] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows([header] + cells)
        return buf.getvalue()
    widths = [max(len(r[i]) for r in [header] + cells) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [header] + cells) + "\n"


def cmd_bench(args: argparse.Namespace) -> int:
    cfg = SolverConfig(node_limit=args.node_limit or 500_000, time_limit=args.time_limit, seed=args.seed)
    try:
        rows = bench_rows(args.suite, cfg, args.seed)
    except InternalContradiction as exc:
        print(f"VERIFICATION FAILURE: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    header = ["instance", "delta", "algorithm", "colors", "bound", "exact", "slack"]
    table = [[r.instance, r.delta, r.algorithm, r.colors, r.bound, r.exact, r.slack] for r in rows]
    sys.stdout.write(format_rows(header, table, args.format))
    return EXIT_OK


def scan_sample(samples: int, max_n: int, seed: int) -> list[Multigraph]:
    graphs = []
    for i in range(samples):
        n = 3 + (i % (max_n - 2))
        graphs.append(random_outerplanar(n, seed + i))
    return graphs


def cmd_scan(args: argparse.Namespace, solver: Callable | None = None) -> int:
    cfg = SolverConfig(node_limit=args.node_limit or 200_000, time_limit=args.time_limit, seed=args.seed)
    graphs = scan_sample(args.samples, args.max_n, args.seed)
    report = scan_conjecture(graphs, cfg, solver)
    header = ["index", "n", "m", "delta", "exact", "bound", "slack"]
    table = [[r.index, r.n, r.m, r.delta, r.chi, conjecture_bound(r.delta), r.slack] for r in report.rows]
    sys.stdout.write(format_rows(header, table, args.format))
    print(f"solved {len(report.solved)} skipped {report.skipped}")
    print(f"min-slack {'' if report.min_slack is None else report.min_slack}".rstrip())
    if report.counterexamples:
        for r in report.counterexamples:
            print(f"COUNTEREXAMPLE index={r.index} n={r.n} delta={r.delta} exact={r.chi} "
                  f"bound={conjecture_bound(r.delta)}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--time-limit", type=float, default=None, help="seconds per solver call")
    common.add_argument("--node-limit", type=int, default=None, help="search nodes per solver call")
    common.add_argument("--format", choices=("text", "csv"), default="text")

    p = argparse.ArgumentParser(prog="starcolor", description="Star edge coloring toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate an instance")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--delta", type=int)
    g.add_argument("--a", type=int)
    g.add_argument("--b", type=int)
    g.add_argument("--blocks", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("color", parents=[common], help="color a graph with a constructive algorithm")
    c.add_argument("graph")
    c.add_argument("--algo", choices=ALGORITHMS, required=True)
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", parents=[common], help="check a coloring")
    v.add_argument("graph")
    v.add_argument("coloring")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("exact", parents=[common], help="exact star chromatic index")
    e.add_argument("graph")
    e.add_argument("--max-colors", type=int, default=None)
    e.set_defaults(func=cmd_exact)

    b = sub.add_parser("bench", parents=[common], help="algorithm colors against exact values")
    b.add_argument("--suite", choices=SUITES, default="spiders")
    b.set_defaults(func=cmd_bench)

    s = sub.add_parser("scan-conjecture", parents=[common], help="exact index vs floor(3D/2)+1 on random outerplanar graphs")
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--max-n", type=int, default=9)
    s.set_defaults(func=cmd_scan)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
