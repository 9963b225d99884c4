"""Command-line interface.

Commands
    gen-hm M                  emit the hub-matching graph HM(M) as an edge list
    check-walk-regular        exact walk-regularity verdict
    entropy --beta B          walk entropy at a single temperature
    scan                      entropy over a beta grid (CSV-friendly)
    find-crossings            all maximal-entropy temperatures in (0, beta-max]
    verify-counterexample     combined report including conjecture checks

Input is an edge-list file, ``-`` for stdin, or ``--hm M`` to generate the
hub-matching graph in-process.  All numerical work lives in the library;
this module only parses flags, dispatches, and formats.

Exit status: 0 success, 1 usage or input error, 2 computation error
(overflow, eigensolver failure).  Output is deterministic: machine formats
carry 12 significant digits, human output 6; warnings go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .entropy import entropy_scan, scan_csv_lines, walk_entropy
from .graphs import EdgeListError, Graph, hm_graph, parse_edge_list, serialize_edge_list
from .spectral import (
    CentralityOverflowError,
    EigendecompositionError,
    InsufficientTermsError,
    eigendecompose,
)
from .temperature import (
    IndistinguishableClassesError,
    find_crossings,
    verify_counterexample,
)
from .walks import is_walk_regular, vertex_classes

_COMPUTATION_ERRORS = (
    CentralityOverflowError,
    EigendecompositionError,
    InsufficientTermsError,
    IndistinguishableClassesError,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1 (argparse defaults to 2, which we reserve for
    # computation failures)
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _machine(x: float) -> str:
    return f"{x:.12g}"


def _human(x: float) -> str:
    return f"{x:.6g}"


def _round_floats(obj):
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_round_floats(v) for v in obj]
    return obj


def _print_json(doc) -> None:
    print(json.dumps(_round_floats(doc), indent=2))


def _load_graph(args) -> Graph:
    has_input = getattr(args, "input", None) is not None
    has_hm = getattr(args, "hm", None) is not None
    if has_input == has_hm:
        raise UsageError(
            "provide exactly one input: an edge-list path ('-' for stdin) or --hm M"
        )
    if has_hm:
        return hm_graph(args.hm)
    if args.input == "-":
        return parse_edge_list(sys.stdin.read())
    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from exc
    return parse_edge_list(text)


def _reject_csv(args) -> None:
    if args.format == "csv":
        raise UsageError(f"csv output is not supported for {args.command}")


def _cmd_gen_hm(args) -> int:
    sys.stdout.write(serialize_edge_list(hm_graph(args.m)))
    return 0


def _cmd_check_walk_regular(args) -> int:
    verdict = is_walk_regular(_load_graph(args))
    if args.format == "json":
        _print_json(verdict.as_dict())
        return 0
    _reject_csv(args)
    print(f"walk-regular: {'true' if verdict.is_walk_regular else 'false'}")
    if verdict.witness is not None:
        w = verdict.witness
        print(
            f"witness: length {w.length}, vertices {w.u} and {w.v}, "
            f"counts {w.count_u} vs {w.count_v}"
        )
    reps = ", ".join(str(c[0]) for c in verdict.classes)
    print(f"classes: {len(verdict.classes)} (representatives: {reps})")
    return 0


def _entropy_report_dict(report) -> dict:
    return {
        "beta": report.beta,
        "entropy": report.entropy,
        "max_entropy": report.max_entropy,
        "deficit": report.deficit,
        "spread": report.spread,
        "is_maximal": report.is_maximal,
        "trace": report.trace,
        "probabilities": [float(p) for p in report.probabilities],
    }


def _cmd_entropy(args) -> int:
    g = _load_graph(args)
    d = eigendecompose(g)
    tol = args.tol if args.tol is not None else 1e-10
    report = walk_entropy(d, args.beta, tol)
    if args.format == "json":
        _print_json(_entropy_report_dict(report))
    elif args.format == "csv":
        reps = [c[0] for c in vertex_classes(g)]
        print("\n".join(scan_csv_lines([report], reps)))
    else:
        print(f"beta = {_human(report.beta)}")
        print(f"entropy = {_human(report.entropy)}")
        print(f"max_entropy = {_human(report.max_entropy)}")
        print(f"deficit = {_human(report.deficit)}")
        print(f"spread = {_human(report.spread)}")
        print(f"maximal = {'true' if report.is_maximal else 'false'}")
    return 0


def _cmd_scan(args) -> int:
    g = _load_graph(args)
    d = eigendecompose(g)
    tol = args.tol if args.tol is not None else 1e-10
    reports = entropy_scan(d, args.beta_min, args.beta_max, args.step, tol)
    reps = [c[0] for c in vertex_classes(g)]
    if args.format == "csv":
        print("\n".join(scan_csv_lines(reports, reps)))
    elif args.format == "json":
        _print_json(
            [
                {
                    "beta": r.beta,
                    "entropy": r.entropy,
                    "max_entropy": r.max_entropy,
                    "deficit": r.deficit,
                    "spread": r.spread,
                    "class_values": {
                        str(rep): float(v)
                        for rep, v in zip(reps, r.centrality_values()[reps])
                    },
                }
                for r in reports
            ]
        )
    else:
        print(f"{'beta':>12} {'entropy':>12} {'deficit':>12} {'spread':>12}")
        for r in reports:
            print(
                f"{_human(r.beta):>12} {_human(r.entropy):>12} "
                f"{_human(r.deficit):>12} {_human(r.spread):>12}"
            )
    return 0


def _cmd_find_crossings(args) -> int:
    g = _load_graph(args)
    tol = args.tol if args.tol is not None else 1e-8
    scan = find_crossings(g, args.beta_max, args.step, tol)
    if args.format == "json":
        _print_json(scan.as_dict())
        return 0
    _reject_csv(args)
    if scan.walk_regular:
        print("walk-regular: true (entropy maximal for every beta >= 0)")
        return 0
    print("walk-regular: false")
    if not scan.crossings:
        print(f"no maximal-entropy temperatures found in (0, {_human(args.beta_max)}]")
    for c in scan.crossings:
        print(
            f"crossing: beta* = {_machine(c.beta_star)}  "
            f"bracket_width = {_human(c.bracket[1] - c.bracket[0])}  "
            f"spread = {_human(c.max_spread_at_root)}"
        )
    for p in scan.pairwise_only:
        print(
            f"pairwise-only: beta = {_machine(p.beta)}  pair = {p.pair}  "
            f"spread = {_human(p.spread)}"
        )
    return 0


def _cmd_verify_counterexample(args) -> int:
    g = _load_graph(args)
    beta_one_tol = args.tol if args.tol is not None else 1e-10
    report = verify_counterexample(
        g, args.beta_max, args.step, beta_one_tol=beta_one_tol
    )
    if args.format == "json":
        _print_json(report.as_dict())
        return 0
    _reject_csv(args)
    verdict = report.verdict
    print(f"walk-regular: {'true' if verdict.is_walk_regular else 'false'}")
    if verdict.witness is not None:
        w = verdict.witness
        print(
            f"witness: length {w.length}, vertices {w.u} and {w.v}, "
            f"counts {w.count_u} vs {w.count_v}"
        )
    hist = ", ".join(f"{d}: {c}" for d, c in sorted(report.degree_histogram.items()))
    print(f"degree histogram: {{{hist}}}")
    if report.scan.walk_regular:
        print("crossings: all beta (walk-regular)")
    else:
        print(f"crossings found: {report.crossing_count}")
        for c in report.scan.crossings:
            print(
                f"  beta* = {_machine(c.beta_star)}  "
                f"spread = {_human(c.max_spread_at_root)}"
            )
    print(f"counterexample: {'true' if report.is_counterexample else 'false'}")
    print(
        "entropy maximal at beta = 1: "
        f"{'true' if report.entropy_maximal_at_beta_one else 'false'}"
    )
    print(
        f"crossing count {report.crossing_count} <= n-1 = {report.crossing_bound}: "
        f"{'true' if report.within_crossing_bound else 'false'}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="walkentropy", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    io_parent = _Parser(add_help=False)
    io_parent.add_argument(
        "input", nargs="?", help="edge-list file, or '-' for stdin"
    )
    io_parent.add_argument(
        "--hm", type=int, metavar="M", help="use the hub-matching graph HM(M) as input"
    )
    io_parent.add_argument(
        "--format",
        choices=("csv", "json", "human"),
        default="human",
        help="output format (default: human)",
    )
    io_parent.add_argument(
        "--tol",
        type=float,
        default=None,
        metavar="F",
        help="maximality tolerance override (defaults: 1e-10; find-crossings 1e-8)",
    )

    p = sub.add_parser("gen-hm", help="emit the hub-matching graph HM(M)")
    p.add_argument("m", type=int, help="family parameter (positive)")
    p.set_defaults(func=_cmd_gen_hm)

    p = sub.add_parser(
        "check-walk-regular", parents=[io_parent], help="exact walk-regularity verdict"
    )
    p.set_defaults(func=_cmd_check_walk_regular)

    p = sub.add_parser(
        "entropy", parents=[io_parent], help="walk entropy at one temperature"
    )
    p.add_argument("--beta", type=float, required=True, help="temperature (>= 0)")
    p.set_defaults(func=_cmd_entropy)

    p = sub.add_parser("scan", parents=[io_parent], help="entropy over a beta grid")
    p.add_argument("--beta-min", type=float, default=0.0, help="grid start (default 0)")
    p.add_argument("--beta-max", type=float, default=10.0, help="grid end (default 10)")
    p.add_argument("--step", type=float, default=0.01, help="grid step (default 0.01)")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser(
        "find-crossings",
        parents=[io_parent],
        help="all maximal-entropy temperatures in (0, beta-max]",
    )
    p.add_argument("--beta-max", type=float, default=10.0, help="scan end (default 10)")
    p.add_argument("--step", type=float, default=0.01, help="grid step (default 0.01)")
    p.set_defaults(func=_cmd_find_crossings)

    p = sub.add_parser(
        "verify-counterexample",
        parents=[io_parent],
        help="walk-regularity, crossings, and conjecture checks",
    )
    p.add_argument("--beta-max", type=float, default=10.0, help="scan end (default 10)")
    p.add_argument("--step", type=float, default=0.01, help="grid step (default 0.01)")
    p.set_defaults(func=_cmd_verify_counterexample)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _COMPUTATION_ERRORS as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, EdgeListError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
