import argparse
import logging
import sys
import traceback

from commands import COMMANDS
from config import Config
from errors import InputError, PreconditionError, ScalarError
from logging_config import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_INTERRUPTED = 130


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meetdet",
        description="Exact hyperdeterminants and F-determinants of meet hypermatrices.",
    )
    parser.add_argument(
        "--debug", action="store_true", help="Enable debug mode for logging"
    )
    parser.add_argument(
        "--threads", type=int, default=None, help="Worker threads (overrides MEETDET_THREADS)"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Parse arguments, run one command and map failures onto exit codes."""
    args = build_parser().parse_args(argv)

    try:
        config = Config.from_env()
        if args.threads is not None:
            config.threads = args.threads
        config.validate()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    # Set up logging with debug flag
    setup_logging(args.debug, config.log_file)

    try:
        return args.handler(args, config)
    except InputError as e:
        logger.error(f"Input error: {e}")
        return EXIT_INPUT
    except PreconditionError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_PRECONDITION
    except ScalarError as e:
        logger.error(f"Arithmetic error: {e}")
        return EXIT_PRECONDITION
    except KeyboardInterrupt:
        logger.info("* Stopping...")
        return EXIT_INTERRUPTED
    except Exception as e:
        logger.error(f"Unexpected error: {e}")
        logger.debug(traceback.format_exc())
        raise


if __name__ == "__main__":
    sys.exit(main())
