import argparse
import logging

from config import Config
from scalar import format_scalar
from verification.worked_examples import worked_examples

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "paper-examples", aliases=["examples"], help="Reproduce the worked symbolic examples"
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: Config) -> int:
    status = 0
    for example in worked_examples():
        print(f"{example.name}")
        print(f"  computed: {format_scalar(example.value)}")
        print(f"  expected: {format_scalar(example.expected)}")
        if example.matches:
            print("  match: yes")
            continue
        status = 1
        print("  match: no")
        print(f"  difference: {format_scalar(example.difference)}")
        print(f"  oracle: {format_scalar(example.oracle)}")
    return status
