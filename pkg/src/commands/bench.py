import argparse
import csv
import logging
import sys
from collections import defaultdict

import numpy as np

from commands.methods import METHODS, Instance, evaluate
from config import Config
from errors import InputError
from hyperdet import SignProduct
from verification.instances import random_grounded, random_meet_semilattice

logger = logging.getLogger(__name__)

COLUMNS = ["method", "n", "k", "terms", "wall_ms", "value_digest"]


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("bench", help="Time methods on random instances and write CSV")

    parser.add_argument(
        "--sizes", type=str, default="4x3", help="Comma-separated n x k pairs, e.g. 4x3,3x4"
    )

    parser.add_argument(
        "--methods", type=str, default="brute,expand,ligen", help="Comma-separated methods"
    )

    parser.add_argument("--seed", type=int, default=0, help="Seed for the random instances")

    parser.add_argument("--output", type=str, default="-", help="CSV path, '-' for stdout")

    parser.add_argument(
        "--force", action="store_true", help="Run enumerations above the term limit"
    )

    parser.set_defaults(handler=run)


def parse_sizes(text: str) -> list[tuple[int, int]]:
    sizes = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        try:
            n, k = (int(v) for v in part.lower().split("x"))
        except ValueError:
            raise InputError(f"malformed size {part!r}, expected <n>x<k>") from None
        if n < 1 or k < 2:
            raise InputError(f"size {part} needs n >= 1 and k >= 2")
        sizes.append((n, k))
    return sizes


def parse_methods(text: str) -> list[str]:
    methods = [m.strip() for m in text.split(",") if m.strip()]
    for method in methods:
        if method not in METHODS:
            raise InputError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    return methods


def bench_instance(seed: int, n: int, k: int) -> Instance:
    """Random semilattice on n elements, X = L, z_x = x, one shared F, sign-product F-map."""
    rng = np.random.default_rng([seed, n, k])
    sl = random_meet_semilattice(rng, n)
    gf = random_grounded(rng, sl, range(n), diagonal=True, uniform=True)
    return Instance(k, SignProduct(k - 2), grounded=gf)


def run(args: argparse.Namespace, config: Config) -> int:
    sizes = parse_sizes(args.sizes)
    methods = parse_methods(args.methods)
    digests: dict[tuple[int, int], set[str]] = defaultdict(set)
    rows = []
    for n, k in sizes:
        instance = bench_instance(args.seed, n, k)
        for method in methods:
            report = evaluate(method, instance, config, force=args.force)
            digests[(n, k)].add(report.value_digest)
            rows.append(
                [method, n, k, report.terms, f"{report.wall_ms:.3f}", report.value_digest]
            )

    if args.output == "-":
        write_csv(sys.stdout, rows)
    else:
        with open(args.output, "w", newline="", encoding="utf-8") as handle:
            write_csv(handle, rows)
        logger.info(f"Wrote {len(rows)} rows to {args.output}")

    disagreeing = sorted(size for size, seen in digests.items() if len(seen) > 1)
    for n, k in disagreeing:
        logger.error(f"Methods disagree on the value for n={n}, k={k}")
    return 1 if disagreeing else 0


def write_csv(handle, rows: list[list]) -> None:
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(COLUMNS)
    writer.writerows(rows)
