import argparse
import logging

from commands.methods import METHODS, Instance, evaluate, parse_fmap_spec
from config import Config
from errors import InputError
from numth import (
    BUILTIN_FUNCTIONS,
    builtin_function,
    divisor_closure,
    gcd_closure,
    gcd_grounded_function,
)

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "gcd", help="Evaluate a GCD hypermatrix built from an integer set"
    )

    parser.add_argument(
        "--set", dest="values", type=str, required=True, help="Comma-separated positive integers"
    )

    parser.add_argument("--k", type=int, default=2, help="Order")

    parser.add_argument(
        "--function", choices=BUILTIN_FUNCTIONS, default="id", help="Arithmetic function F"
    )

    parser.add_argument("--method", choices=METHODS, default="ligen", help="Evaluation method")

    parser.add_argument(
        "--closure", choices=["none", "gcd", "divisor"], default="none", help="Close the set first"
    )
    parser.add_argument("--fmap", type=str, default="sign", help="sign, one or table:<file>")

    parser.add_argument(
        "--force", action="store_true", help="Run enumerations above the term limit"
    )

    parser.set_defaults(handler=run)


def parse_values(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise InputError(f"malformed integer set {text!r}") from None
    if not values:
        raise InputError("integer set must not be empty")
    return values


def run(args: argparse.Namespace, config: Config) -> int:
    values = parse_values(args.values)
    if args.closure == "gcd":
        values = gcd_closure(values)
    elif args.closure == "divisor":
        values = divisor_closure(values)
    if args.k < 2:
        raise InputError(f"order must be at least 2, got {args.k}")

    F = builtin_function(args.function, max(values))
    gf = gcd_grounded_function(values, F)
    instance = Instance(args.k, parse_fmap_spec(args.fmap, args.k), grounded=gf)
    report = evaluate(args.method, instance, config, force=args.force)
    print(f"set: {','.join(str(v) for v in values)}")
    print("\n".join(report.lines()))
    return 0
