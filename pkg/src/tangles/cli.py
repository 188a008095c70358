"""
Command-line entry point: ``tangles <subcommand> ...``.

Exit codes: 0 success, 1 a claimed bound failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import analysis, construct, oracle, render
from .perm import format_perm, parse_perm
from .tangle import Tangle, TangleError, dump, load

OK, BOUND_VIOLATION, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def _metrics_lines(T: Tangle) -> list[str]:
    return [
        f"performs {format_perm(T.performs)}",
        f"moves {T.total_moves}",
        f"max_moves_per_path {T.max_moves}",
        f"corners {T.corner_count}",
        f"clusters {T.cluster_count}",
        f"depth {T.depth}",
        f"simple: {'true' if T.is_simple else 'false'}",
    ]


def _perm_arg(args) -> tuple[int, ...]:
    if args.perm is not None and args.random is not None:
        raise InputError("give either --perm or --random, not both")
    if args.perm is not None:
        try:
            return parse_perm(args.perm)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    if args.random is not None:
        if args.random < 1:
            raise InputError("--random needs a positive size")
        p = list(range(1, args.random + 1))
        random.Random(args.seed).shuffle(p)
        return tuple(p)
    raise InputError("a permutation is required (--perm or --random)")


def cmd_build(args) -> int:
    pi = _perm_arg(args)
    report = construct.build(pi, args.algo)
    if args.out:
        dump(report.tangle, args.out)
        print(f"wrote {args.out}")
    for line in _metrics_lines(report.tangle):
        print(line)
    print(f"performs: {'PASS' if report.verified['performs'] else 'FAIL'}")
    for key, bound in report.claims.items():
        verdict = "PASS" if report.verified[key] else "FAIL"
        if key == "simple":
            print(f"simple: {verdict}")
        else:
            print(f"{key} ≤ {bound}: {verdict}")
    return OK if report.ok else BOUND_VIOLATION


def cmd_verify(args) -> int:
    try:
        T = load(args.file)
    except (OSError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    for line in _metrics_lines(T):
        print(line)
    return OK


def cmd_render(args) -> int:
    try:
        T = load(args.file)
        opts = render.RenderOptions(cell=args.cell, corners=args.corners,
                                    cluster_links=args.cluster_links, color_seed=args.color_seed)
    except (OSError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    svg = render.to_svg(T, opts)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return OK


def _budget(text: str) -> oracle.SearchBudget:
    if text == "standard":
        return oracle.STANDARD
    if text == "extended":
        return oracle.EXTENDED
    try:
        return oracle.SearchBudget(time_limit=float(text))
    except ValueError as exc:
        raise InputError(f"--budget must be standard, extended or seconds, got {text!r}") from exc


def cmd_search(args) -> int:
    try:
        pi = parse_perm(args.perm)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    budget = _budget(args.budget)
    if args.objective == "total":
        res = oracle.min_total_moves(pi, budget)
    else:
        res = oracle.min_max_moves(pi, budget)
    witness_file = None
    if args.witness and res.witness is not None:
        dump(res.witness, args.witness)
        witness_file = args.witness
    record = oracle.result_record(pi, args.objective, res, witness_file)
    if res.status == "exhausted" and args.objective == "maxpath":
        record["value"] = f"≥{res.value}"
    print(json.dumps(record, sort_keys=True, ensure_ascii=False))
    return OK


def cmd_stats(args) -> int:
    samples = args.samples
    if samples != analysis.EXHAUSTIVE:
        try:
            samples = int(samples)
        except ValueError as exc:
            raise InputError(f"--samples must be a count or 'exhaustive', got {samples!r}") from exc
    try:
        records = list(analysis.run_corpus(args.algo, args.sizes, samples, args.seed, args.workers))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            analysis.write_csv(records, fh)
    else:
        analysis.write_csv(records, sys.stdout)
    if args.summary and records:
        for row in analysis.tradeoff_summary(records):
            print(f"# n={row.n} {row.algorithm}: count {row.count}, corners mean {row.mean_corners:.1f} "
                  f"max {row.max_corners}, clusters mean {row.mean_clusters:.1f} min {row.min_clusters}",
                  file=sys.stderr)
    return OK


def cmd_families(args) -> int:
    if args.block is None and args.three is None:
        raise InputError("give --block r and/or --three n")
    try:
        if args.block is not None:
            print(format_perm(construct.block_family(args.block)))
        if args.three is not None:
            print(format_perm(construct.three_move_family(args.three)))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tangles", description="Build, check and search tangles.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a tangle and check its claimed bounds")
    p.add_argument("--algo", required=True, choices=sorted(construct.ALGORITHMS))
    p.add_argument("--perm", help="one-line notation, e.g. 1,4,2,5,6,3")
    p.add_argument("--random", type=int, metavar="N", help="uniform random permutation of size N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="tangle file to write")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="report the metrics of a tangle file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a tangle file as SVG")
    p.add_argument("file")
    p.add_argument("--out")
    p.add_argument("--cell", type=float, default=24.0)
    p.add_argument("--corners", action="store_true")
    p.add_argument("--cluster-links", action="store_true")
    p.add_argument("--color-seed", type=int, default=0)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("search", help="exact search for small permutations")
    p.add_argument("--objective", required=True, choices=["total", "maxpath"])
    p.add_argument("--perm", required=True)
    p.add_argument("--budget", default="standard", help="standard (60 s), extended (no limit) or seconds")
    p.add_argument("--witness", help="write the optimal tangle here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("stats", help="measure constructions over a corpus, as CSV")
    p.add_argument("--algo", nargs="+", default=["fish", "linear", "log"], choices=sorted(construct.ALGORITHMS))
    p.add_argument("--sizes", nargs="+", type=int, required=True)
    p.add_argument("--samples", default="100", help="count per size, or 'exhaustive'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--summary", action="store_true", help="also print a corner/cluster summary to stderr")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("families", help="print the adversarial permutation families")
    p.add_argument("--block", type=int, metavar="R")
    p.add_argument("--three", type=int, metavar="N")
    p.set_defaults(func=cmd_families)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except (InputError, TangleError, construct.ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
