"""
Edge Sched Simulator - compare
==============================
Heuristics against the exact optimum on small instances.
"""

import argparse
from typing import TextIO

from edge_sched.simulation import optimality_gap, summarize_gap

from app.cli.common import (
    add_run_arguments,
    add_scenario_arguments,
    algorithms_from_args,
    scenario_from_args,
)
from app.core.config import get_settings
from app.report import write_gap
from app.report.summary import format_gap


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser("compare", help="objective ratio of each algorithm to the optimum")
    add_scenario_arguments(parser, default_config="small")
    add_run_arguments(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, out: TextIO) -> int:
    settings = get_settings()
    rows = optimality_gap(
        scenario_from_args(args),
        algorithms_from_args(args),
        args.runs,
        args.seed,
        drop_penalty=args.drop_penalty,
        limits=settings.solver_limits,
        random_retry=not args.random_single_pick,
    )
    if args.out is not None:
        write_gap(rows, args.out)
    out.write(format_gap(summarize_gap(rows)))
    return 0
