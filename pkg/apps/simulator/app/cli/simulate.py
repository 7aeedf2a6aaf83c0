"""
Edge Sched Simulator - simulate
===============================
Monte-Carlo runs of several schedulers on one scenario.
"""

import argparse
from typing import TextIO

import structlog

from edge_sched.simulation import monte_carlo

from app.cli.common import (
    add_run_arguments,
    add_scenario_arguments,
    algorithms_from_args,
    emit_summary,
    scenario_from_args,
)
from app.core.config import get_settings
from app.report import write_results
from app.report.summary import format_results

logger = structlog.get_logger(__name__)


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser("simulate", help="Monte-Carlo runs, one CSV row per (run, algorithm)")
    add_scenario_arguments(parser, default_config="paper_default")
    add_run_arguments(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, out: TextIO) -> int:
    settings = get_settings()
    config = scenario_from_args(args)
    results = monte_carlo(
        config,
        algorithms_from_args(args),
        args.runs,
        args.seed,
        workers=settings.THREADS,
        drop_penalty=args.drop_penalty,
        limits=settings.solver_limits,
        random_retry=not args.random_single_pick,
    )
    write_results(results, args.out, out)
    emit_summary(format_results(results), args, out)
    logger.info("Results written", rows=len(results), path=args.out or "<stdout>")
    return 0
