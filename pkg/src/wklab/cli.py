"""Command-line front end.

Exit codes: 0 property holds / success, 1 property fails, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .conjecture import build_refutation_report, check_levit_tankus_condition
from .formats import FORMATS, emit_graph, emit_graph6, guess_format, parse_graph, parse_graph6_stream
from .generators import all_labeled_graphs, graph_code, random_corpus
from .graph import Graph, GraphInputError, alpha, beta
from .lexproduct import lex_product_with_clique, theorem1_sides
from .recognition import is_one_well_covered, is_wk
from .treewidth import DecompositionError, fpt_analysis, min_fill_decomposition, parse_td

SCHEMA = "wk-lab/1"
JOBS_ENV = "WKLAB_JOBS"
CENSUS_MAX_N = 7
BRUTE_FORCE_MAX_N = 12


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _graph_summary(g: Graph) -> dict:
    return {"n": g.n, "m": g.m, "graph6": emit_graph6(g)}


def _read_input(args) -> Graph:
    if args.graph is not None:
        if args.graph == "-":
            text, path = sys.stdin.read(), None
        else:
            try:
                text, path = Path(args.graph).read_text(), args.graph
            except OSError as exc:
                raise UsageError(f"cannot read {args.graph}: {exc.strerror}") from None
    else:
        text, path = args.inline.replace("\\n", "\n"), None
    fmt = args.format if args.format != "auto" else guess_format(text, path)
    return parse_graph(text, fmt)


def _write(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _positive(value: str) -> int:
    try:
        k = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from None
    if k < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {k}")
    return k


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# -- commands -----------------------------------------------------------------


def cmd_check(args) -> int:
    g = _read_input(args)
    report = is_wk(g, args.k)
    out = {"schema": SCHEMA, "command": "check", "graph": _graph_summary(g), "k": args.k}
    out.update(report.to_dict(timing=not args.no_timing))
    _write(args, _dump(out))
    return 0 if report.verdict else 1


def cmd_reduce(args) -> int:
    g = _read_input(args)
    p = lex_product_with_clique(g, args.k)
    if not args.verify:
        _write(args, emit_graph(p.product, args.emit_format))
        return 0
    base, product = theorem1_sides(g, args.k)
    out = {
        "schema": SCHEMA,
        "command": "reduce",
        "k": args.k,
        "base": _graph_summary(g),
        "product": _graph_summary(p.product),
        "base_well_covered": base,
        "product_wk": product,
        "agree": base == product,
    }
    _write(args, _dump(out))
    return 0 if base == product else 1


def cmd_conjecture(args) -> int:
    generator = args.s is not None or args.t is not None
    has_graph = args.graph is not None or args.inline is not None
    if generator == has_graph:
        raise UsageError("give either --s and --t, or one graph input")
    if generator:
        if args.s is None or args.t is None:
            raise UsageError("--s and --t go together")
        if args.s >= args.t:
            raise UsageError(f"the family needs s < t, got s={args.s}, t={args.t}")
        report = build_refutation_report(args.s, args.t, args.variant)
        out = {"schema": SCHEMA, "command": "conjecture", **report.to_dict()}
        _write(args, _dump(out))
        return 0 if report.confirmed else 1
    g = _read_input(args)
    res = check_levit_tankus_condition(g, args.variant)
    out = {
        "schema": SCHEMA,
        "command": "conjecture",
        "graph": _graph_summary(g),
        "condition_variant": args.variant,
        "condition_holds": res.holds,
        "failures": [st.to_dict() for st in res.failures()],
        "trace": [st.to_dict() for st in res.trace],
    }
    _write(args, _dump(out))
    return 0 if res.holds else 1


def census_row(item: tuple[str, Graph, int]) -> dict:
    """One census row; top-level so worker processes can import it."""
    gid, g, kmax = item
    row = {"id": gid, "graph6": emit_graph6(g), "n": g.n, "m": g.m, "alpha": alpha(g), "beta": beta(g)}
    for k in range(1, kmax + 1):
        row[f"W{k}"] = int(is_wk(g, k).verdict)
    row["one_well_covered"] = int(is_one_well_covered(g))
    row["isolated"] = len(g.isolated_vertices())
    row["cond_closed"] = int(check_levit_tankus_condition(g, "closed").holds)
    row["cond_open"] = int(check_levit_tankus_condition(g, "open").holds)
    return row


def _census_items(args) -> tuple[list[tuple[str, Graph, int]], dict]:
    meta = {}
    if args.graph6 is not None:
        try:
            text = sys.stdin.read() if args.graph6 == "-" else Path(args.graph6).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.graph6}: {exc.strerror}") from None
        graphs = parse_graph6_stream(text)
        meta["source"] = "graph6"
        return [(f"g{i}", g, args.k) for i, g in enumerate(graphs, 1)], meta
    lo, hi = args.n_min, args.n_max
    if lo < 0 or hi < lo:
        raise UsageError(f"bad vertex range {lo}..{hi}")
    if args.sample is not None:
        meta.update(source="random", seed=args.seed, sample=args.sample)
        graphs = random_corpus(args.sample, lo, hi, args.seed)
        return [(f"r{i}", g, args.k) for i, g in enumerate(graphs, 1)], meta
    if hi > CENSUS_MAX_N:
        raise UsageError(f"internal enumeration is limited to n <= {CENSUS_MAX_N}; "
                         "pipe larger graphs in with --graph6")
    meta["source"] = "labeled"
    items = []
    for n in range(lo, hi + 1):
        for g in all_labeled_graphs(n):
            items.append((f"n{n}:{graph_code(g)}", g, args.k))
    return items, meta


def cmd_census(args) -> int:
    items, meta = _census_items(args)
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(census_row, items, chunksize=max(1, len(items) // (jobs * 8))))
    else:
        rows = [census_row(it) for it in items]
    fields = ["id", "graph6", "n", "m", "alpha", "beta"] + [f"W{k}" for k in range(1, args.k + 1)] + [
        "one_well_covered", "isolated", "cond_closed", "cond_open"]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    buf.write("\n# summary\n")
    buf.write(f"# schema={SCHEMA}\n")
    for key in sorted(meta):
        buf.write(f"# {key}={meta[key]}\n")
    summary = csv.writer(buf, lineterminator="\n")
    summary.writerow(["column", "count"])
    summary.writerow(["graphs", len(rows)])
    for col in fields[6:]:
        if col == "isolated":
            summary.writerow(["with_isolated", sum(1 for r in rows if r[col])])
        else:
            summary.writerow([col, sum(r[col] for r in rows)])
    _write(args, buf.getvalue())
    return 0


def cmd_treewidth(args) -> int:
    g = _read_input(args)
    if args.td is not None:
        try:
            td = parse_td(Path(args.td).read_text())
        except OSError as exc:
            raise UsageError(f"cannot read {args.td}: {exc.strerror}") from None
        source = "file"
    else:
        td = min_fill_decomposition(g)
        source = "min-fill"
    res = fpt_analysis(g, td)
    out = {
        "schema": SCHEMA,
        "command": "treewidth",
        "graph": _graph_summary(g),
        "decomposition": source,
        "width": res.width,
        "alpha": res.alpha,
        "beta": res.beta,
        "well_covered": res.well_covered,
    }
    if g.n <= BRUTE_FORCE_MAX_N:
        out["brute_force"] = {"alpha": alpha(g), "beta": beta(g),
                              "agree": (alpha(g), beta(g)) == (res.alpha, res.beta)}
    _write(args, _dump(out))
    return 0


# -- parser -------------------------------------------------------------------


def _input_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--graph", metavar="PATH", help="graph file ('-' for stdin)")
    src.add_argument("--inline", metavar="TEXT", help="graph text given directly; '\\n' separates lines")
    p.add_argument("--format", choices=("auto",) + FORMATS, default="auto",
                   help="input format (default: guess from suffix and content)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wklab", description="Exact tools for well-covered and W_k graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide W_k for one graph")
    _input_args(p)
    p.add_argument("--k", type=_positive, default=1)
    p.add_argument("--no-timing", action="store_true", help="write elapsed_s as null for byte-stable output")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reduce", help="emit G . K_k, optionally checking both sides of the reduction")
    _input_args(p)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--emit-format", choices=FORMATS, default="edgelist")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("conjecture", help="refutation report for G(s, t) or condition trace for a graph")
    _input_args(p, required=False)
    p.add_argument("--s", type=_positive)
    p.add_argument("--t", type=_positive)
    p.add_argument("--variant", choices=("closed", "open"), default="closed")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("census", help="CSV sweep over many graphs")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--graph6", metavar="PATH", help="graph6 stream, one graph per line ('-' for stdin)")
    p.add_argument("--sample", type=_positive, help="draw this many random graphs instead of enumerating")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=_positive, default=2, help="emit W1..Wk columns")
    p.add_argument("--jobs", type=_positive, help=f"worker processes (default: ${JOBS_ENV} or 1)")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("treewidth", help="alpha, beta and well-coveredness via tree decomposition DPs")
    _input_args(p)
    p.add_argument("--td", metavar="PATH", help="PACE-style .td decomposition (default: min-fill)")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_treewidth)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except DecompositionError as exc:
        sys.stderr.write(_dump({"schema": SCHEMA, "error": "invalid decomposition",
                                "violations": exc.violations or [str(exc)]}))
        return 2
    except (UsageError, GraphInputError) as exc:
        sys.stderr.write(f"wklab {args.command}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
