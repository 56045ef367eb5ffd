#!/usr/bin/env python3
"""
kummerx command-line interface.

Exit codes: 0 success, 1 a verification report failed, 2 invalid input or
configuration, 3 precision exhausted or certification failed.
"""

import argparse
import asyncio
import json
import sys
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional, TextIO

from ..arith.pisum import bt_bound, bt_bound_mv, pi_sum
from ..arith.primes import SIEVE_LIMIT, require_odd_prime, sieve_primes
from ..bounds.crossover import STATED_THRESHOLD, summarize_crossover
from ..bounds.formulas import NORMALIZING_PRIME
from ..bounds.models import BoundId
from ..classnumber.kummer import compute_hminus
from ..classnumber.models import HminusMethod
from ..config.loader import load_config
from ..config.models import RunConfig
from ..core.ball import DEFAULT_PRECISION, GUARD_BITS, BallReal, exact_real, working_precision
from ..core.exceptions import InvalidInputError, KummerxError
from ..storage.cache import ResultCache
from ..storage.export import REPORT_COLUMNS, SCAN_COLUMNS, report_row, write_rows
from ..storage.models import CacheEntry, EntryKind
from ..utils.logger import get_logger, set_log_level
from .runner import run_scan, run_siegel, run_verify

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_PRECISION = 3

BOUND_CHOICES = [b.value for b in BoundId] + ["eq2", "cor33"]


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="YAML config file (default: ./kummerx.yaml if present)")
    parser.add_argument("--prec", type=int, help="starting precision in bits")
    parser.add_argument("--max-prec", type=int, help="precision cap in bits")
    parser.add_argument("--cache", help="result cache file (overrides config and KUMMERX_CACHE)")
    parser.add_argument("--no-cache", action="store_true", help="keep results in memory only")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--verbose", "-v", action="store_true", help="same as --log-level INFO")


def _add_range(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--from", dest="p_from", type=int, required=required, help="smallest prime")
    parser.add_argument("--to", dest="p_to", type=int, required=required, help="largest prime")


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="output file (default: stdout)")
    parser.add_argument("--format", choices=["csv", "jsonl"], help="output format")
    parser.add_argument("--jobs", type=int, help="worker processes")


def create_parser() -> argparse.ArgumentParser:
    """Create the main argument parser."""
    parser = argparse.ArgumentParser(
        prog="kummerx",
        description="Relative class numbers of cyclotomic fields and explicit L-function bounds near s = 1",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  kummerx hminus --p 23 --method both
  kummerx scan --from 3 --to 100 --format csv
  kummerx verify --bound lemma21 --from 503 --to 2003
  kummerx verify --bound cor33 --from 9001 --to 11000
  kummerx siegel --from 3 --to 2003
  kummerx pi --p 5 --x 50 --class +1
        """,
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", help="Available commands")

    hminus_parser = subparsers.add_parser("hminus", help="relative class number of one prime")
    hminus_parser.add_argument("--p", type=int, required=True, help="odd prime")
    hminus_parser.add_argument("--method", choices=[m.value for m in HminusMethod], help="computation method")
    _add_common(hminus_parser)

    scan_parser = subparsers.add_parser("scan", help="relative class numbers over a prime range")
    _add_range(scan_parser)
    _add_output(scan_parser)
    _add_common(scan_parser)

    verify_parser = subparsers.add_parser("verify", help="check one bound over a prime range")
    verify_parser.add_argument("--bound", choices=BOUND_CHOICES, required=True, help="bound to check")
    _add_range(verify_parser)
    _add_output(verify_parser)
    verify_parser.add_argument("--x", action="append", help="x-grid expression such as 2p, p^2, 10^7 (repeatable)")
    verify_parser.add_argument("--sigma-fraction", type=float, action="append",
                               help="t in sigma = 1 + t/(c log p), 0 < t <= 1 (repeatable)")
    verify_parser.add_argument("--sigma-multiplier", type=float, action="append",
                               help="m in sigma = 1 + m/(c log p), 0 < m <= 2 (repeatable)")
    verify_parser.add_argument("--nu", type=int, action="append", help="derivative order (repeatable)")
    verify_parser.add_argument("--eq2-sigma", type=float, action="append", help="sigma >= 2 for the identity")
    verify_parser.add_argument("--eq2-truncation", type=int, help="prime-power cut-off X for the identity")
    verify_parser.add_argument("--c", help="zero-free region constant, at least 6.4355")
    verify_parser.add_argument("--force-siegel", action="store_true",
                               help="evaluate bounds as if an exceptional zero were present")
    _add_common(verify_parser)

    siegel_parser = subparsers.add_parser("siegel", help="exceptional-zero scan")
    siegel_parser.add_argument("--p", type=int, help="single odd prime")
    _add_range(siegel_parser, required=False)
    siegel_parser.add_argument("--c", help="zero-free region constant, at least 6.4355")
    siegel_parser.add_argument("--jobs", type=int, help="worker processes")
    _add_common(siegel_parser)

    pi_parser = subparsers.add_parser("pi", help="congruence sum over prime powers")
    pi_parser.add_argument("--p", type=int, required=True, help="odd prime modulus")
    pi_parser.add_argument("--x", required=True, help="cut-off, an integer or decimal")
    pi_parser.add_argument("--class", dest="residue", type=int, choices=[1, -1], default=1,
                           help="residue class +1 or -1 (default: +1)")
    pi_parser.add_argument("--prec", type=int, default=DEFAULT_PRECISION, help="precision in bits")
    pi_parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    pi_parser.add_argument("--verbose", "-v", action="store_true", help="same as --log-level INFO")

    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    grids = {
        "x_values": getattr(args, "x", None),
        "sigma_fractions": getattr(args, "sigma_fraction", None),
        "sigma_multipliers": getattr(args, "sigma_multiplier", None),
        "nu_values": getattr(args, "nu", None),
        "eq2_sigmas": getattr(args, "eq2_sigma", None),
        "eq2_truncation": getattr(args, "eq2_truncation", None),
    }
    overrides: Dict[str, Any] = {
        "precision": {"initial_bits": getattr(args, "prec", None), "max_bits": getattr(args, "max_prec", None)},
        "grids": grids,
        "c_override": float(args.c) if getattr(args, "c", None) else None,
        "force_siegel": True if getattr(args, "force_siegel", False) else None,
        "output_format": getattr(args, "format", None),
        "workers": getattr(args, "jobs", None),
        "cache_path": getattr(args, "cache", None),
    }
    return overrides


def _load(args: argparse.Namespace) -> RunConfig:
    config = load_config(getattr(args, "config", None), _overrides(args))
    if getattr(args, "no_cache", False):
        config = config.model_copy(update={"cache_path": None})
    return config


def _primes_between(p_from: int, p_to: int) -> List[int]:
    if p_to > SIEVE_LIMIT:
        raise InvalidInputError(f"range end {p_to} exceeds the sieve limit {SIEVE_LIMIT}")
    return [q for q in sieve_primes(p_to) if q >= max(p_from, 3)]


@contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        yield f


def _print_json(data: Dict[str, Any], stream: Optional[TextIO] = None) -> None:
    (stream or sys.stdout).write(json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n")


def cmd_hminus(args: argparse.Namespace) -> int:
    config = _load(args)
    p = require_odd_prime(args.p)
    record = compute_hminus(p, args.method, config.precision, config.oracle_ceiling)
    payload = record.to_dict()
    _print_json(payload)
    cache = ResultCache(config.cache_path)
    asyncio.run(cache.append(CacheEntry(
        kind=EntryKind.HMINUS, p=p, payload=payload, config_fingerprint=config.fingerprint()
    )))
    return EXIT_OK if record.certified else EXIT_PRECISION


def cmd_scan(args: argparse.Namespace) -> int:
    config = _load(args)
    primes = _primes_between(args.p_from, args.p_to)
    if not primes:
        logger.info("scan: empty range")
        return EXIT_OK
    if primes[-1] > config.analytic_cap:
        raise InvalidInputError(f"range end {primes[-1]} exceeds the analytic feasibility cap {config.analytic_cap}")
    rows = asyncio.run(run_scan(primes, config, ResultCache(config.cache_path)))
    with _output(args.out) as stream:
        write_rows(rows, stream, config.output_format, SCAN_COLUMNS)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    config = _load(args)
    bound_id = BoundId.parse(args.bound)
    primes = _primes_between(args.p_from, args.p_to)
    reports = asyncio.run(run_verify(bound_id, primes, config))

    if config.output_format == "jsonl":
        rows = [r.to_dict() for r in reports]
    else:
        rows = [report_row(r) for r in reports]
    with _output(args.out) as stream:
        if rows:
            write_rows(rows, stream, config.output_format, REPORT_COLUMNS)
        if bound_id is BoundId.COR33_CROSSOVER and primes:
            if args.p_from > STATED_THRESHOLD or args.p_to <= STATED_THRESHOLD:
                logger.warning(f"crossover range [{args.p_from}, {args.p_to}] does not straddle {STATED_THRESHOLD}")
            summary = summarize_crossover(args.p_from, args.p_to, [r for r in reports if not r.skipped])
            _print_json(summary.to_dict(), stream)

    failed = [r for r in reports if r.failed]
    for report in failed:
        logger.error(f"{report.bound_id} p={report.p} {report.parameters}: "
                     f"lhs {report.lhs.nstr(10)} > rhs {report.rhs.nstr(10)}")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_siegel(args: argparse.Namespace) -> int:
    config = _load(args)
    if args.p is not None:
        primes = [require_odd_prime(args.p)]
    elif args.p_from is not None and args.p_to is not None:
        primes = _primes_between(args.p_from, args.p_to)
    else:
        raise InvalidInputError("give --p or both --from and --to")
    for payload in asyncio.run(run_siegel(primes, config, ResultCache(config.cache_path))):
        _print_json(payload)
    return EXIT_OK


def cmd_pi(args: argparse.Namespace) -> int:
    p = require_odd_prime(args.p)
    x = exact_real(args.x)
    if x < p:
        raise InvalidInputError(f"x must be at least p = {p}, got {args.x}")
    if x > SIEVE_LIMIT:
        raise InvalidInputError(f"x above the sieve limit {SIEVE_LIMIT}")
    pi = pi_sum(p, args.residue, x)
    out = pi.to_dict()
    with working_precision(args.prec + GUARD_BITS):
        value = BallReal(pi.value)
    out["decimal"] = value.nstr(12)
    if p <= NORMALIZING_PRIME or x == p:
        out["bound"] = None
        out["notes"] = f"bound omitted: stated for p > {NORMALIZING_PRIME} and x > p"
    else:
        bound = bt_bound(p, x, args.prec)
        out["bound"] = bound.nstr(12)
        out["bound_mv"] = bt_bound_mv(p, x, args.prec).nstr(12)
        out["within_bound"] = value.certainly_le(bound)
    _print_json(out)
    return EXIT_OK


COMMANDS = {
    "hminus": cmd_hminus,
    "scan": cmd_scan,
    "verify": cmd_verify,
    "siegel": cmd_siegel,
    "pi": cmd_pi,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point."""
    parser = create_parser()
    argv = sys.argv[1:] if argv is None else argv
    if not argv:
        parser.print_help()
        return EXIT_OK

    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return EXIT_OK

    try:
        if getattr(args, "log_level", None):
            set_log_level(args.log_level)
        elif getattr(args, "verbose", False):
            set_log_level("INFO")
        return COMMANDS[args.command](args)
    except KummerxError as e:
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
