"""Command-line front end: analyze graphs, verify the predicate suite, emit
generator families.  JSON output is key-sorted and free of timestamps, so
identical inputs and flags always produce byte-identical bytes.

Exit codes: 0 success, 1 verification failure, 2 input error, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from multiprocessing import Pool
from typing import Any, Sequence

from . import generators
from .graph import (
    Graph,
    GraphFormatError,
    emit_edge_list,
    emit_graph6,
    neighborhood,
    parse_edge_list,
    parse_graph6,
)
from .matching import matching_number
from .quasi_reg import canonical_obstruction, is_quasi_regularizable
from .stable_sets import core, enumerate_maximum_stable_sets, stability_number
from .theorems import DEFAULT_K_RANGE, classify, predicate_ids, run_suite

SCHEMA = "stablecore/1"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def analysis_report(g: Graph, omega_cap: int | None = None) -> dict[str, Any]:
    """The per-graph report; all fields are mutually consistent."""
    alpha = stability_number(g)
    mu = matching_number(g)
    core_set = core(g)
    obstruction = canonical_obstruction(g)
    omega_count: int | str | None = None
    if omega_cap is not None:
        omega, truncated = enumerate_maximum_stable_sets(g, omega_cap)
        omega_count = "truncated" if truncated else len(omega)
    return {
        "schema": SCHEMA,
        "graph6": emit_graph6(g),
        "n": g.n,
        "m": g.m,
        "alpha": alpha,
        "mu": mu,
        "xi": len(core_set),
        "core": sorted(core_set),
        "n_core_neighborhood_size": len(neighborhood(g, core_set)),
        "is_ke": alpha + mu == g.n,
        "has_perfect_matching": 2 * mu == g.n,
        "is_quasi_regularizable": is_quasi_regularizable(g),
        "classification": classify(g),
        "obstruction": sorted(obstruction) if obstruction is not None else None,
        "omega_count": omega_count,
    }


def _format_set(values) -> str:
    return "{" + ",".join(map(str, values)) + "}" if values else "-"


_TABLE_COLUMNS = (
    ("graph6", 14),
    ("n", 3),
    ("m", 3),
    ("alpha", 5),
    ("mu", 3),
    ("xi", 3),
    ("|N(core)|", 9),
    ("ke", 3),
    ("pm", 3),
    ("qr", 3),
    ("class", 14),
    ("core", 12),
    ("obstruction", 12),
)


def _table_row(report: dict[str, Any]) -> str:
    flag = lambda b: "yes" if b else "no"
    cells = (
        report["graph6"],
        report["n"],
        report["m"],
        report["alpha"],
        report["mu"],
        report["xi"],
        report["n_core_neighborhood_size"],
        flag(report["is_ke"]),
        flag(report["has_perfect_matching"]),
        flag(report["is_quasi_regularizable"]),
        report["classification"],
        _format_set(report["core"]),
        _format_set(report["obstruction"]) if report["obstruction"] is not None else "-",
    )
    return "  ".join(str(c).ljust(w) for c, w in zip(cells, (w for _, w in _TABLE_COLUMNS)))


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as handle:
        return handle.read()


def cmd_analyze(args) -> int:
    try:
        text = _read_text(args.input)
    except OSError as exc:
        print(f"stablecore: cannot read input: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    graphs: list[Graph] = []
    try:
        if args.edge_list:
            graphs.append(parse_edge_list(text))
        else:
            for lineno, line in enumerate(text.splitlines(), start=1):
                if not line.strip():
                    continue
                try:
                    graphs.append(parse_graph6(line))
                except GraphFormatError as exc:
                    raise GraphFormatError(str(exc), lineno) from None
    except GraphFormatError as exc:
        print(f"stablecore: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    reports = [analysis_report(g, args.omega_cap) for g in graphs]
    if args.json:
        for report in reports:
            print(_dumps(report))
    elif reports:
        print("  ".join(name.ljust(width) for name, width in _TABLE_COLUMNS))
        for report in reports:
            print(_table_row(report))
    return EXIT_OK


def _suite_worker(payload: tuple[str, int]) -> list[tuple[str, bool, bool, dict | None]]:
    text, k_max = payload
    verdicts = run_suite(parse_graph6(text), range(1, k_max + 1))
    return [(v.id, v.applicable, v.holds, v.witness) for v in verdicts]


def cmd_verify(args) -> int:
    if args.exhaustive_n > 7:
        print("stablecore: --exhaustive-n must be at most 7", file=sys.stderr)
        return EXIT_USAGE
    try:
        sample_sizes = (
            [int(part) for part in args.sample_n.split(",") if part.strip()]
            if args.sample_n
            else []
        )
    except ValueError:
        print(f"stablecore: bad --sample-n list {args.sample_n!r}", file=sys.stderr)
        return EXIT_USAGE
    graphs = [emit_graph6(g) for g in generators.enumerate_labeled(args.exhaustive_n)]
    for n in sample_sizes:
        graphs.extend(
            emit_graph6(g)
            for g in generators.sample_gnp(n, args.edge_prob, args.seed, args.samples)
        )
    k_max = args.k_max
    counts = {
        pid: {"applicable": 0, "passed": 0, "failed": 0}
        for pid in predicate_ids(range(1, k_max + 1))
    }
    failures: list[dict[str, Any]] = []
    payloads = [(g6, k_max) for g6 in graphs]
    if args.jobs > 1 and not args.fail_fast:
        with Pool(args.jobs) as pool:
            results = pool.map(_suite_worker, payloads, chunksize=64)
    else:
        results = (_suite_worker(p) for p in payloads)
    stop = False
    for index, verdicts in enumerate(results):
        for pid, applicable, holds, witness in verdicts:
            entry = counts[pid]
            if applicable:
                entry["applicable"] += 1
            if holds:
                entry["passed"] += 1
            else:
                entry["failed"] += 1
                failures.append(
                    {
                        "index": index,
                        "graph6": graphs[index],
                        "predicate": pid,
                        "witness": witness,
                    }
                )
                stop = args.fail_fast
        if stop:
            break
    summary = {
        "schema": SCHEMA,
        "params": {
            "exhaustive_n": args.exhaustive_n,
            "sample_n": sample_sizes,
            "samples": args.samples,
            "edge_prob": args.edge_prob,
            "seed": args.seed,
            "k_max": k_max,
        },
        "graphs": len(graphs),
        "predicates": counts,
        "failures": failures,
        "ok": not failures,
    }
    if args.json:
        print(_dumps(summary))
    else:
        print(f"graphs checked: {len(graphs)}")
        print(f"{'predicate':<10} {'applicable':>10} {'passed':>8} {'failed':>8}")
        for pid in sorted(counts):
            entry = counts[pid]
            print(
                f"{pid:<10} {entry['applicable']:>10} {entry['passed']:>8} {entry['failed']:>8}"
            )
        for failure in failures:
            print(
                f"FAIL {failure['predicate']} on {failure['graph6']}: {failure['witness']}"
            )
        print("all predicates hold" if not failures else f"{len(failures)} failure(s)")
    return EXIT_OK if not failures else EXIT_VERIFY_FAILED


_GEN_FAMILIES = tuple(
    sorted(
        list(generators.named_ids())
        + ["diamond", "k3_plus_e", "fig45", "fig77", "fig77_odd", "remark_family", "gnp"]
        + list(generators.STANDARD_FAMILIES)
    )
)


def _generate(args) -> tuple[list[Graph], dict[str, int]]:
    family = args.family
    need = lambda flag, name: flag is not None or _usage(f"{family} requires --{name}")
    if family in generators.named_ids() or family in ("diamond", "k3_plus_e"):
        lg = generators.named(family)
        return [lg.graph], lg.labels
    if family == "fig45":
        need(args.p, "p"), need(args.r, "r")
        lg = generators.fig45(args.p, args.r)
        return [lg.graph], lg.labels
    if family == "fig77":
        need(args.p, "p")
        lg = generators.fig77(args.p)
        return [lg.graph], lg.labels
    if family == "fig77_odd":
        need(args.p, "p")
        lg = generators.fig77_odd(args.p)
        return [lg.graph], lg.labels
    if family == "remark_family":
        need(args.k, "k"), need(args.p, "p")
        lg = generators.remark_family(args.k, args.p)
        return [lg.graph], lg.labels
    if family in generators.STANDARD_FAMILIES:
        if family != "k1_plus_c4":
            need(args.n, "n")
        return [generators.standard(family, args.n)], {}
    if family == "gnp":
        need(args.n, "n")
        graphs = list(
            generators.sample_gnp(args.n, args.edge_prob, args.seed, args.count)
        )
        return graphs, {}
    _usage(f"unknown family {family!r}")
    raise AssertionError  # unreachable


class _UsageError(Exception):
    pass


def _usage(message: str) -> None:
    raise _UsageError(message)


def cmd_gen(args) -> int:
    try:
        graphs, labels = _generate(args)
    except (_UsageError, ValueError) as exc:
        print(f"stablecore: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "edge-list" and len(graphs) != 1:
        print("stablecore: edge-list output is limited to a single graph", file=sys.stderr)
        return EXIT_USAGE
    for g in graphs:
        if args.format == "edge-list":
            sys.stdout.write(emit_edge_list(g))
        else:
            print(emit_graph6(g))
    if args.labels is not None:
        with open(args.labels, "w", encoding="ascii") as handle:
            handle.write(_dumps(labels) + "\n")
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="stablecore", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="report stable-set structure per graph")
    analyze.add_argument("input", nargs="?", default="-", help="file path or - for stdin")
    fmt = analyze.add_mutually_exclusive_group()
    fmt.add_argument("--graph6", action="store_true", help="graph6 lines (default)")
    fmt.add_argument("--edge-list", action="store_true", help="edge-list text, one graph")
    analyze.add_argument("--omega-cap", type=int, default=None, metavar="N",
                         help="also count maximum stable sets, up to N")
    analyze.add_argument("--json", action="store_true", help="JSON lines output")
    analyze.set_defaults(func=cmd_analyze)

    verify = sub.add_parser("verify", help="run the predicate suite over corpora")
    verify.add_argument("--exhaustive-n", type=int, default=6, metavar="N",
                        help="sweep all labeled graphs on N vertices (N <= 7)")
    verify.add_argument("--sample-n", default="", metavar="LIST",
                        help="comma-separated vertex counts for sampled graphs")
    verify.add_argument("--samples", type=int, default=1000, metavar="COUNT",
                        help="samples per vertex count")
    verify.add_argument("--edge-prob", type=float, default=0.5, metavar="P")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--k-max", type=int, default=max(DEFAULT_K_RANGE), metavar="K")
    verify.add_argument("--fail-fast", action="store_true",
                        help="stop at the first failing graph (forces --jobs 1)")
    verify.add_argument("--json", action="store_true")
    verify.add_argument("--jobs", type=int, default=1,
                        help="worker processes for the sweep")
    verify.set_defaults(func=cmd_verify)

    gen = sub.add_parser("gen", help="emit a generator family")
    gen.add_argument("family", choices=_GEN_FAMILIES)
    gen.add_argument("--p", type=int, default=None)
    gen.add_argument("--r", type=int, default=None)
    gen.add_argument("--k", type=int, default=None)
    gen.add_argument("--n", type=int, default=None)
    gen.add_argument("--edge-prob", type=float, default=0.5, metavar="P")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--count", type=int, default=1)
    gen.add_argument("--format", choices=("graph6", "edge-list"), default="graph6")
    gen.add_argument("--labels", default=None, metavar="PATH",
                     help="write the label map as a JSON sidecar file")
    gen.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
