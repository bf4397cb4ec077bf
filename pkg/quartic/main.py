"""Command-line entry point."""
import argparse
import logging
import sys
import traceback
from typing import List, Optional

from quartic import __version__, config
from quartic.commands import check, families, search, solve, tables, verify
from quartic.errors import ConfigError, QuarticError, UnknownConfig

logger = logging.getLogger(__name__)

COMMANDS = [tables, solve, check, search, verify, families]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quartic",
        description="Elliptic-curve solutions of A^4+B^4+C^4+D^4+E^4+kF^4=G^4 and A^4+B^4+C^4+kD^4=E^4",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")
    parser.add_argument("--format", choices=["text", "json", "csv"], default=None)
    parser.add_argument("--registry", default=None, help="JSON registry replacing the embedded one")
    sub = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.add_parser(sub)
    return parser


def configure_logging(verbose: bool = False, quiet: bool = False):
    if verbose:
        level = logging.DEBUG
    elif quiet:
        level = logging.WARNING
    else:
        level = getattr(logging, config.LOG_LEVEL, logging.INFO)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand; returns the process exit code.

    0 when every item passes, 1 on a verification failure or domain error,
    2 for usage errors, rejected argument values and unknown configurations.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    try:
        return args.func(args)
    except (UnknownConfig, ConfigError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        logger.error(f"Invalid argument: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 2
    except QuarticError as e:
        logger.error(f"{type(e).__name__}: {e}\n{traceback.format_exc()}")
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
