"""
Edge Sched Simulator - Main Entry Point
=======================================
Command-line interface for the offloading schedulers and experiments.

Subcommands:
- simulate: Monte-Carlo runs, one CSV row per (run, algorithm)
- sweep:    aggregates along one scenario parameter
- framed:   framed simulation with queues and bandwidth estimation
- solve:    one instance, one algorithm, optional solution bundle
- validate: constraint check of a solution bundle
- compare:  objective ratio to the exact optimum
"""

import argparse
import sys
from collections.abc import Sequence
from typing import TextIO

from app import __version__
from app.cli import COMMANDS
from app.cli.error_handler import run_guarded
from app.core.config import get_settings
from app.core.exceptions import UsageError
from app.core.logging import bind_context, clear_context, get_logger, setup_logging

logger = get_logger(__name__)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = _Parser(prog=settings.APP_NAME, description="Offloading schedulers and experiments.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="overrides EDGESCHED_LOG_LEVEL",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def run_cli(
    argv: Sequence[str] | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    """
    Parse ``argv`` and run the chosen subcommand.

    Returns:
        Process exit code: 0 success, 1 internal, 2 usage/config, 3 solver
        limits, 4 invalid schedule
    """
    stdout = stdout or sys.stdout
    setup_logging()
    parsed: dict[str, argparse.Namespace] = {}

    def parse() -> int:
        parsed["args"] = build_parser().parse_args(argv)
        return 0

    code = run_guarded(parse, stderr)
    if code != 0:
        return code

    args = parsed["args"]
    if args.log_level is not None:
        setup_logging(args.log_level)
    bind_context(command=args.command, seed=getattr(args, "seed", None))
    try:
        logger.debug("Command started", argv=list(argv) if argv is not None else sys.argv[1:])
        return run_guarded(lambda: args.handler(args, stdout), stderr)
    finally:
        clear_context()


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
