"""Command-line front end.

Exit codes: 0 on success, 1 on usage or parse errors, 2 when ``verify`` finds
violations.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from .diagrams import SkewDiagram, decay, delta_value, paths
from .errors import SkewPosetError
from .lrrule import cc_type, decompose, one_box_pairs
from .poset import down_covers, is_geq, reduce_to_staircase, up_covers
from .sequences import (
    bar_partitions,
    barp_count,
    bijection_forward,
    f_count,
    format_table,
    g_count,
    p_count,
)
from .verifier import ALL_CHECKS, SweepConfig, class_key, run_suite

SEQUENCES = {"p": p_count, "f": f_count, "g": g_count, "barp": barp_count}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(args, text: str, doc) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _skew_doc(d: SkewDiagram) -> dict:
    return {"lambda": list(d.outer), "mu": list(d.inner)}


def cmd_decompose(args):
    d = SkewDiagram.parse(args.skew)
    ch = decompose(d)
    cc = cc_type(ch)
    doc = {
        "skew": _skew_doc(d),
        "terms": ch.to_records(),
        "cc": list(cc),
        "pairs": one_box_pairs(ch),
    }
    _emit(args, str(ch), doc)


def cmd_cc(args):
    d = SkewDiagram.parse(args.skew)
    ch = decompose(d)
    cc = cc_type(ch)
    pairs = one_box_pairs(ch)
    _emit(args, f"{cc}\npairs: {pairs}", {"skew": _skew_doc(d), "cc": list(cc), "pairs": pairs})


def cmd_delta(args):
    d = SkewDiagram.parse(args.skew)
    n = delta_value(d)
    _emit(args, str(n), {"skew": _skew_doc(d), "delta": n})


def cmd_paths(args):
    d = SkewDiagram.parse(args.skew)
    pp = paths(d)
    _emit(
        args,
        f"o={pp.outer_seq}\ni={pp.inner_seq}",
        {"skew": _skew_doc(d), "outer": pp.outer_seq, "inner": pp.inner_seq},
    )


def cmd_covers(args):
    c = decay(SkewDiagram.parse(args.skew))
    found = up_covers(c) if args.direction == "up" else down_covers(c)
    reps = [cls.arrangement() for cls in sorted(found, key=class_key)]
    _emit(
        args,
        "\n".join(str(r) for r in reps),
        {"class": str(c), "direction": args.direction, "covers": [_skew_doc(r) for r in reps]},
    )


def cmd_compare(args):
    a = decay(SkewDiagram.parse(args.a))
    b = decay(SkewDiagram.parse(args.b))
    geq, leq = is_geq(a, b), is_geq(b, a)
    relation = "=" if geq and leq else ">=" if geq else "<=" if leq else "incomparable"
    _emit(args, relation, {"a": str(a), "b": str(b), "geq": geq, "leq": leq, "relation": relation})


def cmd_reduce(args):
    chain = reduce_to_staircase(decay(SkewDiagram.parse(args.skew)))
    doc = {
        "start": _skew_doc(chain.start.arrangement()),
        "steps": [
            {"move": str(move), "skew": _skew_doc(cls.arrangement())} for move, cls in chain.steps
        ],
    }
    _emit(args, chain.to_text(), doc)


def cmd_seq(args):
    names = [args.name] if args.name else ["g", "p", "f"]
    if args.max < 1:
        raise UsageError("--max must be at least 1")
    doc = {
        name: [{"n": n, "value": SEQUENCES[name](n)} for n in range(1, args.max + 1)]
        for name in names
    }
    _emit(args, format_table(args.max, names), doc)


def cmd_bijection(args):
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    rows = []
    for b in bar_partitions(args.n):
        pair = bijection_forward(b)
        rows.append((b, pair))
    header = f"{'barpartition':<16} {'core':<12} {'nu1':<14} nu2"
    lines = [header] + [
        f"{str(b):<16} {str(b.core) or '()':<12} {str(p.nu1):<14} {p.nu2}" for b, p in rows
    ]
    doc = [
        {
            "core": list(b.core),
            "n1": b.n1,
            "n2": b.n2,
            "nu1": list(p.nu1),
            "nu2": list(p.nu2),
        }
        for b, p in rows
    ]
    _emit(args, "\n".join(lines), doc)


def cmd_verify(args):
    checks = tuple(args.checks.split(",")) if args.checks else ALL_CHECKS
    cfg = SweepConfig(
        max_boxes=args.max_boxes,
        checks=checks,
        sample_seed=args.seed,
        samples=args.samples,
        parallel_jobs=args.jobs,
    )
    report = run_suite(cfg)
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.to_text(), end="")
    return 0 if report.passed else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skewposet", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("-v", "--verbose", action="store_true")
    # --format is accepted before or after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common])

    def with_skew(name, func, help_text):
        p = add(name, help_text)
        p.add_argument("skew", help='skew diagram such as "4,3,2,1/2,2"')
        p.set_defaults(func=func)
        return p

    with_skew("decompose", cmd_decompose, "LR decomposition of a skew character")
    with_skew("cc", cmd_cc, "cc-type and one-box pair count")
    with_skew("delta", cmd_delta, "delta value of a skew diagram")
    with_skew("paths", cmd_paths, "outer and inner boundary paths")
    p = with_skew("covers", cmd_covers, "upper or lower covers in the skew poset")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--up", dest="direction", action="store_const", const="up")
    group.add_argument("--down", dest="direction", action="store_const", const="down")
    with_skew("reduce", cmd_reduce, "witness chain down to the staircase class")

    p = add("compare", "order relation between two skew classes")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_compare)

    p = add("seq", "print p, f, g or barp sequences")
    p.add_argument("--name", choices=sorted(SEQUENCES))
    p.add_argument("--max", type=int, default=13)
    p.set_defaults(func=cmd_seq)

    p = add("bijection", "two-coloured partitions vs one-box pairs")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bijection)

    p = add("verify", "exhaustive bound verification")
    p.add_argument("--max-boxes", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--checks", default="", help=f"comma list from {','.join(ALL_CHECKS)}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"skewposet: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 1
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args) or 0
    except (SkewPosetError, UsageError, ValueError) as exc:
        print(f"skewposet: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
