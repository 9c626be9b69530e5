"""Command-line interface: analyze, barriers, roots, verify, hunt."""

from __future__ import annotations

import argparse
import json
import sys

from .barrier_lab import ENUMERATION_LIMIT
from .exact_poly import ThetaSpec
from .graph_core import GraphParseError, VertexCapError, parse_edge_list, parse_graph6
from .reports import analysis_document, analysis_text, roots_document, roots_text
from .theorem_suite import (
    GROUPS,
    HUNT_TARGETS,
    exhaustive_corpus,
    hunt_counterexamples,
    random_corpus,
    read_graph6_file,
    run_suite,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TOO_LARGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class TooLarge(Exception):
    pass


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from None


def _load_graph(args):
    text = _read_input(args.input)
    cap = None if args.force else 26
    try:
        if args.format == "graph6":
            lines = [ln for ln in text.splitlines() if ln.strip()]
            if len(lines) != 1:
                raise UsageError(f"expected exactly one graph6 line, got {len(lines)}")
            return parse_graph6(lines[0], max_vertices=cap)
        return parse_edge_list(text, max_vertices=cap)
    except VertexCapError as e:
        raise TooLarge(str(e)) from None
    except (GraphParseError, ValueError) as e:
        raise UsageError(str(e)) from None


def _theta(args) -> ThetaSpec:
    try:
        if args.theta_poly is not None:
            return ThetaSpec.from_text(args.theta_poly)
        return ThetaSpec.rational(args.theta if args.theta is not None else "0")
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad theta: {e}") from None


def _emit(args, payload: dict, text: str) -> None:
    out = json.dumps(payload, indent=2) if args.output == "json" else text
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def cmd_analyze(args, force_barriers: bool = False) -> int:
    G = _load_graph(args)
    theta = _theta(args)
    if G.n > ENUMERATION_LIMIT and not args.force:
        raise TooLarge(f"n={G.n} exceeds {ENUMERATION_LIMIT}; rerun with --force")
    doc = analysis_document(
        G, theta, args.format, barriers=force_barriers or not args.no_barriers, force=args.force
    )
    _emit(args, doc, analysis_text(doc))
    return EXIT_OK


def cmd_roots(args) -> int:
    doc = roots_document(_load_graph(args), args.format)
    _emit(args, doc, roots_text(doc))
    return EXIT_OK


def _policy(args):
    if args.theta_policy == "file":
        if not args.theta_file:
            raise UsageError("--theta-policy file needs --theta-file")
        text = _read_input(args.theta_file)
        try:
            return [ThetaSpec.from_text(line) for line in text.splitlines() if line.strip() and not line.startswith("#")]
        except ValueError as e:
            raise UsageError(f"bad theta file: {e}") from None
    return args.theta_policy


def cmd_verify(args) -> int:
    groups = tuple(args.groups.split(",")) if args.groups else GROUPS
    for g in groups:
        if g not in GROUPS:
            raise UsageError(f"unknown group {g!r}; choose from {', '.join(GROUPS)}")
    if args.corpus:
        corpus, desc = read_graph6_file(args.corpus), f"graph6 file {args.corpus}"
    elif args.random:
        corpus = random_corpus(args.random_n, args.random, args.edge_probability, args.seed)
        desc = f"{args.random} random G({args.random_n}, {args.edge_probability}) graphs, seed {args.seed}"
    else:
        if args.nmax > 7:
            raise UsageError("exhaustive corpora are limited to --nmax 7; use --random")
        corpus, desc = exhaustive_corpus(args.nmax), f"all labeled graphs on 0..{args.nmax} vertices"
    report = run_suite(corpus, _policy(args), groups, description=desc, jobs=args.jobs)
    _emit(args, report.to_dict(), report.to_text())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_hunt(args) -> int:
    result = hunt_counterexamples(args.target, args.nmax, k=args.count)
    lines = [f"{result.id}: {'found' if result.success else 'not found'} "
             f"({result.graphs_scanned} graphs up to n={result.searched_up_to}, {result.runtime:.1f}s)"]
    for w in result.found:
        lines.append(f"  graph6 {w.graph6}  theta {w.theta_label}  {w.sets}")
    _emit(args, result.to_dict(), "\n".join(lines))
    return EXIT_OK if result.success else EXIT_FAIL


def _graph_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", "-i", default="-", help="graph file, or - for stdin")
    p.add_argument("--format", "-f", choices=("graph6", "edgelist"), default="edgelist")
    p.add_argument("--output", "-o", choices=("json", "text"), default="json")
    p.add_argument("--force", action="store_true", help="lift the vertex caps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thetabarrier", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (("analyze", "multiplicity, decomposition, deficiency and barriers"),
                        ("barriers", "analyze with barrier enumeration always on")):
        p = sub.add_parser(name, help=help_)
        _graph_options(p)
        th = p.add_mutually_exclusive_group()
        th.add_argument("--theta", help="rational theta, e.g. 0, 1, -2, 1/2")
        th.add_argument("--theta-poly", help='minimal polynomial, descending coefficients, e.g. "1 0 -3"')
        p.add_argument("--no-barriers", action="store_true", help="skip barrier enumeration")
        p.add_argument("--out", help="write to a file instead of stdout")

    p = sub.add_parser("roots", help="degree <= 2 root factors of mu with multiplicities")
    _graph_options(p)
    p.add_argument("--out")

    p = sub.add_parser("verify", help="run the theorem suite over a corpus")
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--corpus", help="graph6 file, one graph per line")
    p.add_argument("--random", type=int, default=0, help="number of random graphs instead of an exhaustive corpus")
    p.add_argument("--random-n", type=int, default=10)
    p.add_argument("--edge-probability", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--theta-policy", choices=("zero", "deg2", "file"), default="deg2")
    p.add_argument("--theta-file")
    p.add_argument("--groups", help=f"comma-separated subset of {','.join(GROUPS)}")
    p.add_argument("--jobs", "-j", type=int, default=1)
    p.add_argument("--output", "-o", choices=("json", "text"), default="json")
    p.add_argument("--out")

    p = sub.add_parser("hunt", help="search labeled graphs for a counterexample phenomenon")
    p.add_argument("--target", required=True, choices=HUNT_TARGETS)
    p.add_argument("--nmax", type=int, default=7)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--output", "-o", choices=("json", "text"), default="json")
    p.add_argument("--out")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return cmd_analyze(args)
        if args.command == "barriers":
            return cmd_analyze(args, force_barriers=True)
        if args.command == "roots":
            return cmd_roots(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_hunt(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except TooLarge as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
