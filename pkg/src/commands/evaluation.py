import argparse
import logging

from commands.methods import METHODS, Instance, evaluate, parse_fmap_spec
from config import Config
from errors import InputError
from formats import read_grounded, read_hypermatrix

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("eval", help="Evaluate an F-determinant by one method")

    parser.add_argument("--method", choices=METHODS, required=True, help="Evaluation method")

    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--gf", type=str, help="Grounded-function file")
    source.add_argument("--hypermatrix", type=str, help="Hypermatrix file (brute and expand only)")
    parser.add_argument(
        "--k", type=int, default=None, help="Order; taken from the hypermatrix if omitted"
    )

    parser.add_argument("--fmap", type=str, default="sign", help="sign, one or table:<file>")

    parser.add_argument(
        "--force", action="store_true", help="Run enumerations above the term limit"
    )
    parser.add_argument("--timing", action="store_true", help="Also print the wall time in ms")

    parser.set_defaults(handler=run)


def load_instance(args: argparse.Namespace) -> Instance:
    if args.hypermatrix:
        m = read_hypermatrix(args.hypermatrix)
        if args.k is not None and args.k != m.k:
            raise InputError(f"--k {args.k} contradicts the order {m.k} of {args.hypermatrix}")
        return Instance(m.k, parse_fmap_spec(args.fmap, m.k), hypermatrix=m)
    k = args.k if args.k is not None else 2
    if k < 2:
        raise InputError(f"order must be at least 2, got {k}")
    return Instance(k, parse_fmap_spec(args.fmap, k), grounded=read_grounded(args.gf))


def run(args: argparse.Namespace, config: Config) -> int:
    report = evaluate(args.method, load_instance(args), config, force=args.force)
    print("\n".join(report.lines(timing=args.timing)))
    return 0
