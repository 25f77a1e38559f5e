# bench_cli/cli.py
"""
Command-line entry point.

Exit status: 0 on success, 1 when a sorter fails verification, 2 on a
usage error (bad flags, unusable combination, unwritable output).
"""
import argparse
import logging
import sys
from typing import List, Optional

from common import config
from common.validator import validate_choice_list, validate_int, validate_int_list
from pbit import ALLOWED_KEY_WIDTHS, ALLOWED_PATTERN_WIDTHS, Order

from .db import BenchDatabaseError, save_report
from .emit import FORMATS, emit
from .generator import DISTRIBUTIONS, SEED_MASK, c_rand_range
from .runner import ALGORITHMS, BenchReport, BenchSpec, VerificationError, run, timing_ratio

logger = logging.getLogger(__name__)

SIZE_STEPS = tuple(10 ** e for e in range(3, 8))
EXPECTED_SPEEDUP = 1.2


def _arg(validator, *args):
    """Adapt a common.validator function to an argparse ``type``."""
    def parse(text):
        try:
            return validator(text, *args)
        except ValueError as e:
            raise argparse.ArgumentTypeError(str(e))
    return parse


def default_sizes(max_n: int) -> List[int]:
    """Decimal steps 10^3, 10^4, ... up to ``max_n``."""
    sizes = [n for n in SIZE_STEPS if n <= max_n]
    return sizes or [max_n]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="listsort-lab",
        description="Benchmark linked-list sorters on seeded inputs and emit the results.",
    )
    p.add_argument("--algo", type=_arg(validate_choice_list, ALGORITHMS),
                   default=list(ALGORITHMS),
                   help="comma-separated algorithms (default: all)")
    p.add_argument("--n", type=_arg(validate_int_list, 0), default=None,
                   help="comma-separated list sizes, e.g. 1000,1e5 (default: 10^3.. up to --max-n)")
    p.add_argument("--k", type=_arg(validate_int_list, 1), default=list(config.DEFAULT_PATTERN_WIDTHS),
                   help=f"pbit pattern widths, any of {ALLOWED_PATTERN_WIDTHS} (default: 4,8,16)")
    p.add_argument("--bits", type=_arg(validate_int, 8, 64), default=config.DEFAULT_KEY_BITS,
                   help=f"key width M, one of {ALLOWED_KEY_WIDTHS}")
    p.add_argument("--order", type=_arg(Order.parse), default=Order.ASCENDING,
                   help="asc or desc (pbit and array_baseline)")
    p.add_argument("--signed", action="store_true", help="signed keys")
    p.add_argument("--seed", type=_arg(validate_int, 0, SEED_MASK), default=None,
                   help=f"64-bit seed (default: LISTSORT_LAB_SEED or {config.FALLBACK_SEED})")
    p.add_argument("--repeats", type=_arg(validate_int, 1, 2 ** 32 - 1),
                   default=config.DEFAULT_REPEATS)
    p.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform",
                   help="input distribution")
    p.add_argument("--paper-rand", "--c-rand", dest="c_rand", action="store_true",
                   help=f"draw keys from [0, {config.C_RAND_MAX:#x}] like C rand()")
    p.add_argument("--max-n", type=_arg(validate_int, 0), default=config.DEFAULT_MAX_N,
                   help="largest accepted list size")
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument("--out", default=None, help="output file (default: standard output)")
    p.add_argument("--verify", action=argparse.BooleanOptionalAction, default=True,
                   help="check every output against the oracle")
    p.add_argument("--db", default=config.DB_PATH or None,
                   help="also append rows to this sqlite file (default: LISTSORT_LAB_DB)")
    p.add_argument("--log-level", default=config.LOG_LEVEL,
                   choices=("DEBUG", "INFO", "WARNING", "ERROR"), type=str.upper)
    return p


def spec_from_args(args: argparse.Namespace) -> BenchSpec:
    """
    :raises ValueError: sizes above --max-n, a malformed LISTSORT_LAB_SEED or an
        invalid combination
    """
    sizes = args.n if args.n is not None else default_sizes(args.max_n)
    too_large = [n for n in sizes if n > args.max_n]
    if too_large:
        raise ValueError(f"sizes {too_large} exceed --max-n {args.max_n}")
    return BenchSpec(
        algorithms=tuple(args.algo),
        sizes=tuple(sizes),
        pattern_widths=tuple(args.k),
        order=args.order,
        signed=args.signed,
        bit_width=args.bits,
        seed=args.seed if args.seed is not None else config.default_seed(),
        repeats=args.repeats,
        key_range=c_rand_range() if args.c_rand else None,
        dist=args.dist,
        verify=args.verify,
    )


def log_speedups(report: BenchReport) -> None:
    """Log how much faster each pbit variant ran than mergesort at the largest n."""
    if "mergesort" not in report.labels():
        return
    for label in report.labels():
        if not label.startswith("pbit"):
            continue
        try:
            ratio = timing_ratio(report, label, "mergesort")
        except ValueError:
            continue
        if ratio < EXPECTED_SPEEDUP:
            logger.warning("%s ran only %.2fx faster than mergesort", label, ratio)
        else:
            logger.info("%s ran %.2fx faster than mergesort", label, ratio)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    try:
        spec = spec_from_args(args)
    except ValueError as e:
        parser.error(str(e))
    logger.info("running %s", spec)

    try:
        report = run(spec)
    except VerificationError as e:
        print(f"verification failed: {e.row.label} n={e.row.n}", file=sys.stderr)
        print(str(e.reproduction), file=sys.stderr)
        return 1
    log_speedups(report)

    try:
        emit(report, args.format, args.out)
    except OSError as e:
        print(f"{parser.prog}: cannot write {args.out}: {e}", file=sys.stderr)
        return 2

    if args.db:
        try:
            save_report(args.db, report)
        except BenchDatabaseError as e:
            print(f"{parser.prog}: {e}", file=sys.stderr)
            return 2
    return 0
