"""Command-line entry point.

Subcommands: analyze, decompose, reduce, scan, gen. Payloads go to stdout
(or --out), diagnostics to stderr. Exit codes:

    0  success
    2  parse, usage or configuration error
    3  internal consistency error (two computations disagreed)
    4  input outside a theorem's hypotheses (not_chordal | not_connected | has_k4)
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .analyze import CSV_HEADER, ConsistencyError, analyze_graph
from .chordal import NotChordal, clique_tree, maximum_cardinality_search
from .gen import (
    FAMILIES,
    ConfigError,
    GeneratorConfig,
    derive_seed,
    exhaustive_catalog,
    generate_chordal_pasting,
    generate_k_tree,
    generate_random_connected,
)
from .graph import Graph, GraphParseError, complete_graph, encode_graph6, is_connected, iter_graph6_lines, parse_edge_list
from .reduce import PreconditionError, random_spanning_tree, triangle_free_reduction
from .scan import CONJECTURES, ScanConfig, ScanError, run_scan

EXIT_OK, EXIT_INPUT, EXIT_CONSISTENCY, EXIT_PRECONDITION = 0, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(EXIT_INPUT, f"cannot read {path}: {exc}") from exc


def read_graphs(path: str, fmt: str) -> list[tuple[str, Graph]]:
    """(graph_id, graph) pairs in input order."""
    text = _read_text(path)
    stem = "stdin" if path == "-" else Path(path).stem
    try:
        if fmt == "edge-list":
            return [(stem, parse_edge_list(text))]
        graphs = [(f"{stem}:{lineno}", g) for lineno, g in iter_graph6_lines(text)]
    except GraphParseError as exc:
        raise CliError(EXIT_INPUT, f"{path}: {exc}") from exc
    if not graphs:
        raise CliError(EXIT_INPUT, f"{path}: no graphs in input")
    return graphs


def _emit(text: str, out: str | None) -> None:
    if out:
        try:
            Path(out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise CliError(EXIT_INPUT, f"cannot write {out}: {exc}") from exc
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _single_graph(args) -> Graph:
    graphs = read_graphs(args.input, args.format)
    if len(graphs) != 1:
        raise CliError(EXIT_INPUT, f"expected one graph, got {len(graphs)}")
    return graphs[0][1]


def _analyze_one(item: tuple[str, Graph, bool]):
    gid, g, relax = item
    return analyze_graph(g, gid, chordal_relax=relax)


def cmd_analyze(args) -> int:
    graphs = read_graphs(args.input, args.format)
    items = [(gid, g, args.chordal_relax) for gid, g in graphs]
    for gid, g in graphs:
        if g.n == 0:
            raise CliError(EXIT_INPUT, f"{gid}: graph has no vertices")
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_analyze_one, items))
    else:
        reports = [_analyze_one(it) for it in items]
    _emit("".join(_dump(r.to_json()) + "\n" for r in reports), args.out)
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in reports:
            w.writerow(r.csv_row())
        Path(args.csv).write_text(buf.getvalue(), encoding="utf-8")
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = _single_graph(args)
    if not is_connected(g):
        raise PreconditionError("not_connected", f"graph with n={g.n} is not connected")
    peo = maximum_cardinality_search(g)
    if isinstance(peo, NotChordal):
        raise PreconditionError("not_chordal", f"vertex {peo.vertex} has non-adjacent later neighbours {peo.pair}")
    d = clique_tree(g, peo).to_json()
    payload = {k: [[str(x) for x in row] for row in rows] for k, rows in d.items()}
    _emit(_dump(payload) + "\n", args.out)
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = _single_graph(args)
    if not 0 <= args.root < g.n:
        raise CliError(EXIT_INPUT, f"root {args.root} out of range for n={g.n}")
    tree = None
    if args.random_tree:
        if not is_connected(g):
            raise PreconditionError("not_connected", f"graph with n={g.n} is not connected")
        tree = random_spanning_tree(g, args.root, args.seed)
    trace = triangle_free_reduction(g, args.root, tree)
    _emit(_dump(trace.to_json()) + "\n", args.out)
    if trace.violations:
        print(f"reduction invariants failed: {'; '.join(trace.violations)}", file=sys.stderr)
    return EXIT_OK


def cmd_scan(args) -> int:
    cfg = ScanConfig(
        conjecture=args.conjecture,
        n_min=args.n_min,
        n_max=args.n_max,
        count=args.count,
        seed=args.seed,
        catalog=args.catalog,
    )
    report = run_scan(cfg, checkpoint=args.checkpoint, checkpoint_every=args.checkpoint_every,
                      jobs=args.jobs, stop_after=args.stop_after)
    if report is None:
        print(f"stopped early; resume with --checkpoint {args.checkpoint}", file=sys.stderr)
        return EXIT_OK
    _emit(report.dumps(), args.out)
    found = len(report.counterexamples)
    print(f"{cfg.conjecture}: {report.total_graphs} graphs, {found} counterexamples, "
          f"{report.elapsed:.2f}s", file=sys.stderr)
    if cfg.conjecture == "theorem1_k4" and found:
        print("theorem-backed scan found counterexamples: implementation bug", file=sys.stderr)
        return EXIT_CONSISTENCY
    return EXIT_OK


def _gen_config(args) -> GeneratorConfig:
    if args.config:
        text = _read_text(args.config)
        try:
            return GeneratorConfig.from_json(text)
        except (json.JSONDecodeError, TypeError) as exc:
            raise CliError(EXIT_INPUT, f"bad generator config: {exc}") from exc
    return GeneratorConfig(
        family=args.family, n=args.n, k=args.k, summands=args.summands,
        max_summand_size=args.max_summand_size, min_separator=args.min_separator,
        clique_cap=args.clique_cap, max_vertices=args.max_vertices,
        predicates=args.predicate or [], catalog=args.catalog, seed=args.seed, count=args.count,
    )


def generate(cfg: GeneratorConfig) -> list[Graph]:
    fam = cfg.family
    if fam == "complete":
        if cfg.n is None:
            raise ConfigError("complete family needs n")
        return [complete_graph(cfg.n)]
    if fam == "catalog_filter":
        if cfg.n is None:
            raise ConfigError("catalog family needs n")
        return list(exhaustive_catalog(cfg.n, cfg.predicates, cfg.catalog))
    out = []
    for i in range(cfg.count):
        s = derive_seed(cfg.seed, i)
        if fam == "k_tree":
            if cfg.n is None:
                raise ConfigError("k_tree family needs n")
            out.append(generate_k_tree(cfg.k, cfg.n, s))
        elif fam == "random_connected":
            if cfg.n is None:
                raise ConfigError("random_connected family needs n")
            out.append(generate_random_connected(cfg.n, s, cfg.edge_prob))
        else:
            out.append(generate_chordal_pasting(cfg, s)[0])
    return out


def cmd_gen(args) -> int:
    cfg = _gen_config(args)
    graphs = generate(cfg)
    _emit("".join(encode_graph6(g) + "\n" for g in graphs), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cliquepoly", description="Clique polynomials of chordal graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_input=True):
        if with_input:
            sp.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin")
            sp.add_argument("--format", choices=["edge-list", "graph6"], default="edge-list")
        sp.add_argument("--out", help="write payload here instead of stdout")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--jobs", type=int, default=1)

    sp = sub.add_parser("analyze", help="JSON report per input graph")
    common(sp)
    sp.add_argument("--csv", help="also write a CSV summary row per graph")
    sp.add_argument("--chordal-relax", action="store_true",
                    help="report the Turan numbers for non-chordal K4-free graphs without asserting them")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("decompose", help="clique-tree decomposition JSON")
    common(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("reduce", help="spanning-tree reduction trace JSON")
    common(sp)
    sp.add_argument("--root", type=int, default=0)
    sp.add_argument("--random-tree", action="store_true", help="seeded random spanning tree instead of BFS")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("scan", help="batch scan for a theorem or conjecture")
    common(sp, with_input=False)
    sp.add_argument("conjecture", choices=CONJECTURES)
    sp.add_argument("--n-min", type=int)
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--count", type=int, default=500)
    sp.add_argument("--catalog", help="graph6 catalog file (theorem1_k4)")
    sp.add_argument("--checkpoint", help="checkpoint file; resumes when it exists")
    sp.add_argument("--checkpoint-every", type=int, default=50)
    sp.add_argument("--stop-after", type=int, help="halt after this many graphs (checkpoint kept)")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("gen", help="generate graphs as graph6 lines")
    common(sp, with_input=False)
    sp.add_argument("--config", help="JSON generator config document (overrides flags)")
    sp.add_argument("--family", choices=FAMILIES, default="chordal_pasting")
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int, default=3)
    sp.add_argument("--summands", type=int, default=5)
    sp.add_argument("--max-summand-size", type=int, default=4)
    sp.add_argument("--min-separator", type=int, default=1)
    sp.add_argument("--clique-cap", type=int)
    sp.add_argument("--max-vertices", type=int)
    sp.add_argument("--predicate", action="append", help="catalog filter, repeatable")
    sp.add_argument("--catalog")
    sp.add_argument("--count", type=int, default=1)
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except PreconditionError as exc:
        print(f"precondition failed: {exc.reason} ({exc})", file=sys.stderr)
        return EXIT_PRECONDITION
    except ConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (ScanError, ConfigError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
