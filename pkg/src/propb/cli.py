"""Command-line workbench.

Subcommands: construct, q, check, count, derive-h8, alteration,
design-check, verify-paper.  Exit code 0 when the operation succeeds and
every check passes, 1 when a check fails, 2 on usage or input errors.

Stdout is deterministic for a given argv (and seed); wall-clock timing goes
to stderr so identical runs stay byte-identical on the comparison surface.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Callable, Sequence

from propb.alteration import RetriesExhaustedError, run_alteration
from propb.analysis import design_check, verify_paper_example
from propb.colouring import enumerate_proper, is_two_colourable
from propb.constructions import (
    affine_plane_gf4,
    derive_h8,
    fano,
    paper_example,
    seymour_toft,
    triangle,
)
from propb.core import Hypergraph, q_value
from propb.formats import check_line, parse, serialize

CONSTRUCTIONS: dict[str, Callable[[], Hypergraph]] = {
    "triangle": triangle,
    "fano": fano,
    "seymour-toft": seymour_toft,
    "h4": affine_plane_gf4,
    "h8": lambda: derive_h8(affine_plane_gf4()),
    "paper-example": paper_example,
}


def _read(path: str) -> Hypergraph:
    return parse(Path(path).read_text(encoding="utf-8"))


def _emit(doc: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(doc)
    else:
        Path(output).write_text(doc, encoding="utf-8")


def _cmd_construct(args: argparse.Namespace) -> int:
    _emit(serialize(CONSTRUCTIONS[args.name]()), args.output)
    return 0


def _cmd_q(args: argparse.Namespace) -> int:
    value = q_value(_read(args.file))
    print(f"{value} = {value.decimal_str()}")
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    colourable, witness = is_two_colourable(_read(args.file))
    if colourable:
        assert witness is not None
        reds = " ".join(str(u) for u in sorted(witness.red))
        print(f"COLOURABLE red: {reds}".rstrip())
    else:
        print("UNCOLOURABLE")
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    print(enumerate_proper(_read(args.file)).total_proper)
    return 0


def _cmd_derive_h8(args: argparse.Namespace) -> int:
    _emit(serialize(derive_h8(_read(args.file))), args.output)
    return 0


def _cmd_alteration(args: argparse.Namespace) -> int:
    h, report = run_alteration(args.n, args.seed, args.max_retries, args.strict)
    p = report.params
    print("command: alteration")
    print(f"n: {p.n}")
    print(f"seed: {p.seed}")
    print(f"strict: {'yes' if p.strict else 'no'}")
    print(f"max-retries: {p.max_retries}")
    print(f"vertices: {p.v}")
    print(f"sampled-edges: {p.m_prime}")
    print(f"blocking-edge-size: {p.big_edge_size}")
    print(f"survivor-threshold: {p.survivor_threshold}")
    print(f"retries-used: {report.retries_used}")
    print(f"survivor-count: {report.survivor_count}")
    print(f"distinct-sampled-edges: {report.h1.edge_count}")
    print(f"blocking-edges-added: {h.edge_count - report.h1.edge_count}")
    print(f"total-edges: {h.edge_count}")
    print(f"q-sampled: {report.q_h1} = {report.q_h1.decimal_str()}")
    print(f"q-blocking: {report.q_h2} = {report.q_h2.decimal_str()}")
    print(f"q-total: {report.q_total} = {report.q_total.decimal_str()}")
    print(f"verified-uncolourable: {'yes' if report.verified_uncolourable else 'no'}")
    print(f"status: {'PASS' if report.verified_uncolourable else 'FAIL'}")
    if args.output is not None:
        Path(args.output).write_text(serialize(h), encoding="utf-8")
    return 0 if report.verified_uncolourable else 1


def _cmd_design_check(args: argparse.Namespace) -> int:
    h = _read(args.file)
    result = design_check(h.edges, h.v, args.t)
    print("command: design-check")
    print(f"input: {args.file}")
    print(f"points: {result.point_count}")
    print(f"blocks: {result.block_count}")
    print(f"block-size: {result.block_size}")
    print(f"t: {result.t}")
    if result.lam is not None:
        print(f"lambda: {result.lam}")
        print("status: PASS")
        return 0
    bad = " ".join(str(u) for u in sorted(result.counterexample or frozenset()))
    print("lambda: -")
    print(f"counterexample: {bad}")
    print("status: FAIL")
    return 1


def _cmd_verify_paper(args: argparse.Namespace) -> int:
    report = verify_paper_example()
    print("command: verify-paper")
    print("input: builtin")
    for entry in report.checks:
        print(check_line(entry.name, entry.expected, entry.actual, entry.passed))
    print(f"q-exact: {report.q_total}")
    print(f"q-decimal: {report.q_total.decimal_str()}")
    good = sum(1 for entry in report.checks if entry.passed)
    print(f"checks-passed: {good}/{len(report.checks)}")
    print(f"status: {'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="propb",
        description="Exact 2-colourability workbench for non-uniform hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a named hypergraph as a document")
    p.add_argument("name", choices=sorted(CONSTRUCTIONS))
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("q", help="exact dyadic weight of a hypergraph file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_q)

    p = sub.add_parser("check", help="decide 2-colourability; print a witness if any")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("count", help="exact number of proper 2-colourings")
    p.add_argument("file")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("derive-h8", help="blocking edges for a balanced-colouring input")
    p.add_argument("file")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_derive_h8)

    p = sub.add_parser("alteration", help="randomized non-2-colourable construction")
    p.add_argument("--n", type=int, required=True, help="smallest edge size")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="retry until the survivor threshold holds")
    p.add_argument("--max-retries", type=int, default=50)
    p.add_argument("-o", "--output", help="write the final hypergraph to a file")
    p.set_defaults(func=_cmd_alteration)

    p = sub.add_parser("design-check", help="test the edges as blocks of a t-design")
    p.add_argument("file")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=_cmd_design_check)

    p = sub.add_parser("verify-paper", help="verify the bundled 16-vertex example")
    p.set_defaults(func=_cmd_verify_paper)
    return parser


def cli(argv: Sequence[str] | None = None) -> int:
    """Run one command; returns the exit code instead of exiting."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    started = time.monotonic()
    try:
        return args.func(args)
    except RetriesExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        print(f"elapsed-seconds: {time.monotonic() - started:.3f}", file=sys.stderr)


def main() -> None:
    raise SystemExit(cli())
