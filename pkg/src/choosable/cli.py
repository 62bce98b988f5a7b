"""Command-line entry point.

Exit codes: 0 success, 1 hypothesis violation (or a coloring that fails
``verify``), 2 unreadable or malformed input, 3 internal assertion.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .configurations import detect_configuration, format_configuration
from .discharging import audit
from .formats import FormatError, format_coloring, format_graph, format_lists, parse_coloring, parse_graph, parse_lists
from .plane_graph import PlaneGraph, PlaneGraphError, find_triangle_adjacent_c4
from .reductions import EDGE, TOTAL, ExtensionFailure
from .solver import (
    HypothesisViolated,
    NoConfigurationFound,
    default_k,
    make_context,
    solve,
    uniform_lists,
    verify,
)

EXIT_OK, EXIT_HYPOTHESIS, EXIT_FORMAT, EXIT_INTERNAL = 0, 1, 2, 3


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _Fail(EXIT_FORMAT, f"cannot read {path}: {exc.strerror}") from exc


def _load_graph(path: str) -> PlaneGraph:
    try:
        return parse_graph(_read(path))
    except (FormatError, PlaneGraphError) as exc:
        raise _Fail(EXIT_FORMAT, f"{path}: {type(exc).__name__}: {exc}") from exc


def _load(parser, path: str):
    try:
        return parser(_read(path))
    except FormatError as exc:
        raise _Fail(EXIT_FORMAT, f"{path}: {exc}") from exc


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _mode(args) -> str:
    return TOTAL if args.total else EDGE


def _context(g: PlaneGraph, args):
    mode = _mode(args)
    k = args.k if args.k is not None else default_k(g)
    lists = _load(parse_lists, args.lists) if args.lists else uniform_lists(g, mode, k)
    return make_context(g, lists, mode, args.k)


def cmd_color(args) -> int:
    g = _load_graph(args.graph)
    ctx = _context(g, args)
    coloring = solve(g, ctx)
    problems = verify(g, ctx, coloring)
    assert not problems, problems
    _emit(format_coloring(coloring), args.output)
    return EXIT_OK


def cmd_oracle(args) -> int:
    from .testkit.oracle import DEFAULT_CAP, SearchSpaceTooLarge, brute_force_color

    g = _load_graph(args.graph)
    ctx = _context(g, args)
    try:
        coloring = brute_force_color(g, ctx.lists, ctx.mode, cap=args.cap or DEFAULT_CAP)
    except SearchSpaceTooLarge as exc:
        raise _Fail(EXIT_FORMAT, str(exc)) from exc
    _emit("NONE\n" if coloring is None else format_coloring(coloring), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    ctx = _context(g, args)
    coloring = _load(parse_coloring, args.coloring)
    problems = verify(g, ctx, coloring)
    for p in problems:
        print(p)
    if problems:
        return EXIT_HYPOTHESIS
    print("OK")
    return EXIT_OK


def cmd_audit(args) -> int:
    g = _load_graph(args.graph)
    k = args.k if args.k is not None else default_k(g)
    if k < default_k(g):
        raise HypothesisViolated(f"k={k} is below max(7, max degree)={default_k(g)}")
    _emit(audit(g, k).text(), args.output)
    return EXIT_OK


def cmd_detect(args) -> int:
    g = _load_graph(args.graph)
    ctx = make_context(g, {}, EDGE, args.k)
    witness = find_triangle_adjacent_c4(g)
    if witness is not None:
        raise HypothesisViolated(witness.describe(), witness)
    c = detect_configuration(g, ctx.k)
    _emit((format_configuration(c) if c is not None else "NONE") + "\n", args.output)
    return EXIT_OK


def cmd_gen(args) -> int:
    from .testkit.generate import GenerationFailed, GenParams, generate_instance

    p = GenParams(n=args.n, max_degree=args.max_degree, family=args.family, seed=args.seed, mode=_mode(args))
    try:
        g, lists = generate_instance(p)
    except GenerationFailed as exc:
        raise _Fail(EXIT_INTERNAL, f"generation failed: {exc}") from exc
    prefix = args.output
    Path(f"{prefix}.graph").write_text(format_graph(g))
    Path(f"{prefix}.lists").write_text(format_lists(lists))
    print(f"{prefix}.graph {prefix}.lists V {g.num_vertices} E {g.num_edges} maxdeg {g.max_degree}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="choosable", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def mode_flags(p, required=True):
        m = p.add_mutually_exclusive_group(required=required)
        m.add_argument("--edge", action="store_true", help="list edge coloring")
        m.add_argument("--total", action="store_true", help="list total coloring")

    def k_flag(p):
        p.add_argument("--k", type=int, default=None, help="palette parameter, at least max(7, max degree)")

    for name, fn, helptext in (
        ("color", cmd_color, "color a graph from its lists (uniform 1..k if --lists is omitted)"),
        ("oracle", cmd_oracle, "color by exhaustive search, or print NONE"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("graph")
        p.add_argument("--lists")
        mode_flags(p)
        k_flag(p)
        p.add_argument("-o", "--output")
        if name == "oracle":
            p.add_argument("--cap", type=int, default=None, help="bound on the product of list sizes")
        p.set_defaults(func=fn)

    p = sub.add_parser("verify", help="check a coloring file")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--lists")
    mode_flags(p)
    k_flag(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("audit", help="run the discharging rules and print the ledger")
    p.add_argument("graph")
    k_flag(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("detect", help="print the first reducible configuration, or NONE")
    p.add_argument("graph")
    k_flag(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("gen", help="write <prefix>.graph and <prefix>.lists")
    p.add_argument("--n", type=int, default=60)
    p.add_argument("--max-degree", type=int, default=7)
    p.add_argument("--family", default="triangle-free", choices=("triangle-free", "girth5", "mixed"))
    p.add_argument("--seed", type=int, default=0)
    mode_flags(p, required=False)
    p.add_argument("-o", "--output", required=True, help="output prefix")
    p.set_defaults(func=cmd_gen)
    return ap


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except HypothesisViolated as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        if exc.witness is not None:
            w = exc.witness
            print(f"witness triangle {' '.join(map(str, w.triangle))} c4 {' '.join(map(str, w.cycle))}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except ExtensionFailure as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except NoConfigurationFound as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        print(exc.report.text(), file=sys.stderr, end="")
        return EXIT_INTERNAL
    except AssertionError as exc:
        print(f"internal assertion: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())
