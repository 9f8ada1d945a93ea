#!/usr/bin/env python3
"""
╔══════════════════════════════════════════════════════════════╗
║  WWLab — weighted words laboratory                           ║
║                                                              ║
║  Capparelli and Primc identities: series, families, proofs   ║
╚══════════════════════════════════════════════════════════════╝

Usage:
    python main.py enumerate --family C --max-part 3 --max-weight 10
    python main.py series --family GC --k 1 --trunc 3
    python main.py series --family GP --k 1 --trunc 2 --set b=c
    python main.py verify --theorem main --k 1..8 --trunc 24
    python main.py verify --theorem all
    python main.py verify --list
    python main.py bijection forward --lambda "8d+8a+5c+3d+1a" --mu "7c+2c" --trace
    python main.py bijection inverse --nu "..."
    python main.py dilate --rule primc --partition "1a+1b+1c+1d"

stdout carries only the command's output; logs go to stderr.
Exit status: 0 success, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections import Counter
from typing import Any, Callable

from pydantic import ValidationError

from config import LogLevel, WWLabConfig, load_config
from core import SubstitutionSyntaxError, WWLabError
from core.bijection import BijectionTrace, PartitionPair, forward, inverse
from core.closed_forms import (
    finite_capparelli,
    finite_primc,
    product_capparelli,
    product_capparelli_tilde,
    product_primc,
    u_by_recurrence,
)
from core.families import DILATIONS, FAMILIES
from core.partitions import (
    Colour,
    dilate_partition,
    enumerate_partitions,
    format_partition,
    parse_partition,
)
from core.qseries import ColourImage, QSeries, parse_substitution, substitute_colours
from core.recurrences import capparelli_system, h_sequence, primc_system
from theorems import Acceptance, VerificationReport, registry

logger = logging.getLogger("wwlab.main")

JSON_SCHEMA = 1


# ── Logging ──────────────────────────────────────────────────

def setup_logging(verbose: bool = False, level: LogLevel = LogLevel.WARNING):
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, level.value),
        format="%(asctime)s │ %(name)-18s │ %(levelname)-7s │ %(message)s",
        datefmt="%H:%M:%S",
        stream=sys.stderr,
    )


# ── Output Helpers ───────────────────────────────────────────

def emit_json(payload: dict[str, Any], config: WWLabConfig):
    print(json.dumps({"schema": JSON_SCHEMA, **payload}, indent=config.json_indent,
                     sort_keys=True, ensure_ascii=False))


def parse_k_range(text: str) -> list[int]:
    """`5` or `1..8` (inclusive)."""
    lo, sep, hi = text.partition("..")
    try:
        start = int(lo)
        stop = int(hi) if sep else start
    except ValueError:
        raise ValueError(f"Bad k range '{text}': expected K or A..B") from None
    if start < 0 or stop < start:
        raise ValueError(f"Bad k range '{text}': need 0 <= A <= B")
    return list(range(start, stop + 1))


def parse_substitutions(rules: list[str] | None) -> dict[str, ColourImage]:
    mapping: dict[str, ColourImage] = {}
    for rule in rules or ():
        var, image = parse_substitution(rule)
        if var in mapping:
            raise SubstitutionSyntaxError(f"Colour '{var}' substituted twice")
        mapping[var] = image
    return mapping


# ── enumerate ────────────────────────────────────────────────

def cmd_enumerate(args: argparse.Namespace, config: WWLabConfig) -> int:
    spec = FAMILIES[args.family](max_part=args.max_part)
    members = enumerate_partitions(spec, args.max_weight)
    logger.info("%s: %d partitions of weight <= %d", spec.name, len(members), args.max_weight)

    by_weight = Counter(p.weight for p in members)
    counts = [by_weight[n] for n in range(args.max_weight + 1)]
    if args.json:
        emit_json({
            "family": spec.name,
            "max_part": args.max_part,
            "max_weight": args.max_weight,
            "count": len(members),
            "counts_by_weight": counts,
            "partitions": [] if args.counts else [format_partition(p) for p in members],
        }, config)
    elif args.counts:
        for n, count in enumerate(counts):
            print(f"{n} {count}")
    else:
        for p in members:
            print(format_partition(p))
    return 0


# ── series ───────────────────────────────────────────────────

_D = Colour.D

SERIES_FAMILIES: dict[str, tuple[bool, Callable[[int, int], QSeries]]] = {
    "GC": (True, lambda k, trunc: capparelli_system(k, trunc).g.get(k, _D)),
    "GP": (True, lambda k, trunc: primc_system(k, trunc).g.get(k, _D)),
    "H": (True, lambda k, trunc: h_sequence(k, trunc)[k]),
    "U": (True, lambda k, trunc: u_by_recurrence(k, trunc)[k]),
    "CLOSED-GC": (True, finite_capparelli),
    "CLOSED-GP": (True, finite_primc),
    "PRODUCT-CAPA": (False, lambda k, trunc: product_capparelli(trunc)),
    "PRODUCT-CAPA-TILDE": (False, lambda k, trunc: product_capparelli_tilde(trunc)),
    "PRODUCT-PRIMC": (False, lambda k, trunc: product_primc(trunc)),
}


def cmd_series(args: argparse.Namespace, config: WWLabConfig) -> int:
    needs_k, build = SERIES_FAMILIES[args.family]
    if needs_k and args.k is None:
        raise ValueError(f"--k is required for family {args.family}")
    mapping = parse_substitutions(args.set)
    series = build(args.k, args.trunc)
    if mapping:
        series = substitute_colours(series, mapping)

    if args.json:
        emit_json({
            "family": args.family,
            "k": args.k if needs_k else None,
            "substitutions": args.set or [],
            "series": series.to_json(),
            "text": str(series),
        }, config)
    else:
        print(series)
    return 0


# ── verify ───────────────────────────────────────────────────

def _print_report(report: VerificationReport, timing: bool):
    line = report.headline()
    if timing:
        line += f"  ({report.elapsed:.2f}s)"
    print(line)
    if report.mismatch is not None:
        print(f"      {report.mismatch}")
    for key in sorted(report.details):
        print(f"      {key}: {report.details[key]}")


def cmd_verify(args: argparse.Namespace, config: WWLabConfig) -> int:
    if args.list:
        for id, info in registry.list_theorems().items():
            flag = "  [report only]" if info["report_only"] else ""
            print(f"{id:<22}  {info['scope']:<5}  {info['description']}{flag}")
        return 0
    if not args.theorem:
        raise ValueError("verify needs --theorem ID|all (or --list)")

    ids = registry.default_ids() if args.theorem == "all" else [args.theorem]
    k_values = parse_k_range(args.k) if args.k else None
    defaults = Acceptance(
        trunc=config.default_trunc,
        max_weight=config.default_max_weight,
        k_min=config.default_k_min,
        k_max=config.default_k_max,
    )
    reports = registry.run_many(ids, k_values, args.trunc, args.max_weight,
                                threads=config.threads, defaults=defaults)
    failed = sum(1 for r in reports if not r.passed)

    if args.json:
        exclude = None if args.timing else {"elapsed"}
        emit_json({
            "reports": [r.model_dump(mode="json", exclude=exclude) for r in reports],
            "passed": len(reports) - failed,
            "failed": failed,
        }, config)
    else:
        for report in reports:
            _print_report(report, args.timing)
        print(f"{len(reports) - failed} passed, {failed} failed")
    return 1 if failed else 0


# ── bijection ────────────────────────────────────────────────

_TRACE_LINES = (
    ("lambda", lambda t: t.pair.lam),
    ("mu", lambda t: t.pair.mu),
    ("mu'", lambda t: t.mu_prime),
    ("nu1", lambda t: t.nu1),
    ("nu2", lambda t: t.nu2),
    ("nu3", lambda t: t.nu3),
)


def cmd_bijection(args: argparse.Namespace, config: WWLabConfig) -> int:
    if args.direction == "forward":
        pair = PartitionPair(lam=parse_partition(args.lam), mu=parse_partition(args.mu))
        trace: BijectionTrace = forward(pair)
    else:
        trace = inverse(parse_partition(args.nu))

    if args.json:
        payload = trace.model_dump(mode="json", by_alias=True)
        if not args.trace:
            payload = {"direction": payload["direction"], "pair": payload["pair"], "nu": payload["nu3"]}
        emit_json(payload, config)
    elif args.trace:
        for label, pick in _TRACE_LINES:
            print(f"{label}: {format_partition(pick(trace))}")
    elif args.direction == "forward":
        print(format_partition(trace.nu))
    else:
        print(f"lambda: {format_partition(trace.pair.lam)}")
        print(f"mu: {format_partition(trace.pair.mu)}")
    return 0


# ── dilate ───────────────────────────────────────────────────

def cmd_dilate(args: argparse.Namespace, config: WWLabConfig) -> int:
    source = parse_partition(args.partition)
    dilated = dilate_partition(source, DILATIONS[args.rule])
    if args.json:
        emit_json({
            "rule": args.rule,
            "partition": format_partition(source),
            "dilated": format_partition(dilated),
        }, config)
    else:
        print(format_partition(dilated))
    return 0


# ── Entry Point ──────────────────────────────────────────────

def build_parser(config: WWLabConfig) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wwlab",
        description="WWLab — Capparelli and Primc weighted-words identities",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging.")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("enumerate", help="List the members of a partition family.")
    p.add_argument("--family", required=True, choices=list(FAMILIES))
    p.add_argument("--max-part", type=int, default=None, help="Largest part allowed (default: none).")
    p.add_argument("--max-weight", type=int, default=config.default_max_weight)
    p.add_argument("--counts", action="store_true", help="Print counts by weight instead of partitions.")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_enumerate)

    p = commands.add_parser("series", help="Print a truncated generating function.")
    p.add_argument("--family", required=True, choices=list(SERIES_FAMILIES))
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--trunc", type=int, default=config.default_trunc)
    p.add_argument("--set", action="append", metavar="VAR=EXPR", help="Substitute a colour, e.g. b=c or a=a*q^-1.")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_series)

    p = commands.add_parser("verify", help="Check identities over a range of k.")
    p.add_argument("--theorem", default=None, help="Theorem id, or 'all'.")
    p.add_argument("--k", "--k-range", dest="k", default=None, metavar="A..B",
                   help="Default: each theorem's acceptance range, else WWLAB_DEFAULT_K_MIN..WWLAB_DEFAULT_K_MAX.")
    p.add_argument("--trunc", type=int, default=None,
                   help="Default: each theorem's acceptance size, else WWLAB_DEFAULT_TRUNC.")
    p.add_argument("--max-weight", type=int, default=None,
                   help="Default: each theorem's acceptance size, else WWLAB_DEFAULT_MAX_WEIGHT.")
    p.add_argument("--list", action="store_true", help="List theorem ids and exit.")
    p.add_argument("--timing", action="store_true", help="Include elapsed times (output no longer reproducible).")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_verify)

    p = commands.add_parser("bijection", help="Run the (λ, μ) ↔ ν bijection.")
    directions = p.add_subparsers(dest="direction", required=True)
    fwd = directions.add_parser("forward")
    fwd.add_argument("--lambda", dest="lam", required=True, help="λ from the Capparelli family.")
    fwd.add_argument("--mu", required=True, help="μ, every part coloured c.")
    inv = directions.add_parser("inverse")
    inv.add_argument("--nu", required=True, help="ν from the Primc family.")
    for sub in (fwd, inv):
        sub.add_argument("--trace", action="store_true", help="Show every intermediate stage.")
        sub.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_bijection)

    p = commands.add_parser("dilate", help="Apply a dilation rule to a partition.")
    p.add_argument("--rule", required=True, choices=list(DILATIONS))
    p.add_argument("--partition", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_dilate)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        config = load_config()
    except ValidationError as e:
        print(f"wwlab: invalid configuration: {e}", file=sys.stderr)
        return 2

    args = build_parser(config).parse_args(argv)
    setup_logging(verbose=args.verbose, level=config.log_level)

    try:
        return args.handler(args, config)
    except (WWLabError, ValidationError, ValueError) as e:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"wwlab: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
