"""
Edge Sched Simulator - sweep
============================
Monte-Carlo at every value of one scenario parameter.
"""

import argparse
from typing import TextIO

from pydantic import ValidationError

from edge_sched.simulation import SweepSpec, parse_sweep_parameter, sweep

from app.cli.common import (
    add_run_arguments,
    add_scenario_arguments,
    algorithms_from_args,
    emit_summary,
    scenario_from_args,
)
from app.core.config import get_settings
from app.core.exceptions import UsageError
from app.report import write_sweep
from app.report.summary import format_sweep


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser("sweep", help="aggregate metrics along one parameter")
    add_scenario_arguments(parser, default_config="paper_default")
    add_run_arguments(parser, default_algs="gus,random,offload-all,local-all")
    parser.add_argument(
        "--sweep",
        required=True,
        metavar="PARAM=v1,v2,...",
        help="parameter and strictly monotone values",
    )
    parser.set_defaults(handler=run)


def parse_sweep_argument(text: str, runs: int, algorithms: list[str]) -> SweepSpec:
    """
    ``requested_delay_mean=1000,2000,4000`` -> SweepSpec.

    Raises:
        UnknownSweepParameterError: parameter cannot be swept
        UsageError: malformed values
    """
    name, sep, raw_values = text.partition("=")
    if not sep or not raw_values.strip():
        raise UsageError(f"--sweep expects PARAM=v1,v2,..., got '{text}'", argument="--sweep")
    parameter = parse_sweep_parameter(name.strip())
    try:
        values = tuple(float(v) for v in raw_values.split(",") if v.strip())
    except ValueError:
        raise UsageError(f"--sweep values must be numbers, got '{raw_values}'", argument="--sweep")
    try:
        return SweepSpec(
            parameter=parameter,
            values=values,
            runs_per_point=runs,
            algorithms=tuple(algorithms),
        )
    except ValidationError as e:
        raise UsageError(f"--sweep: {e.errors()[0]['msg']}", argument="--sweep")


def run(args: argparse.Namespace, out: TextIO) -> int:
    settings = get_settings()
    config = scenario_from_args(args)
    spec = parse_sweep_argument(args.sweep, args.runs, algorithms_from_args(args))
    points = sweep(
        spec,
        config,
        args.seed,
        workers=settings.THREADS,
        drop_penalty=args.drop_penalty,
        limits=settings.solver_limits,
        random_retry=not args.random_single_pick,
    )
    write_sweep(points, args.out, out)
    emit_summary(format_sweep(points), args, out)
    return 0
