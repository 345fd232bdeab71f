import argparse
import logging

from config import Config
from errors import InputError
from verification.properties import Bounds, run_suite

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "verify", help="Cross-check every method on seeded random instances"
    )

    parser.add_argument("--seed", type=int, default=42, help="Base seed")

    parser.add_argument("--trials", type=int, default=50, help="Trials per property")

    parser.add_argument("--nmax", type=int, default=4, help="Largest index set size")

    parser.add_argument("--kmax", type=int, default=4, help="Largest order")

    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: Config) -> int:
    if args.trials <= 0:
        logger.warning("No trials requested, nothing was verified")
        return 0
    if args.nmax < 1 or args.kmax < 2:
        raise InputError("--nmax must be at least 1 and --kmax at least 2")

    bounds = Bounds(args.nmax, args.kmax, config.threads)
    results = run_suite(args.seed, args.trials, bounds)
    failures = [r.failure for r in results if r.failure is not None]
    for result in results:
        print(f"{result.name}: {result.passed}/{result.total}")
    for failure in failures:
        print(failure.report())
    if failures:
        logger.error(f"{len(failures)} of {len(results)} properties failed")
        return 1
    logger.info(f"All {len(results)} properties passed")
    return 0
