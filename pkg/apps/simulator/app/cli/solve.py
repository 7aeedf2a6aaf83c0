"""
Edge Sched Simulator - solve
============================
One instance, one algorithm: prints the per-request schedule and can save
it with its instance as a solution bundle.
"""

import argparse
from typing import TextIO

import numpy as np

from edge_sched.scenario import generate_instance
from edge_sched.simulation import algorithm_stream, check_size_guards, derive_seed, instance_seed
from edge_sched.schedulers import get_scheduler, parse_algorithms

from app.cli.common import add_scenario_arguments, scenario_from_args
from app.core.config import get_settings
from app.core.exceptions import UsageError
from app.report import SolutionBundle, write_bundle
from app.report.summary import format_schedule


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser("solve", help="schedule one instance and print the assignment")
    add_scenario_arguments(parser, default_config="small")
    parser.add_argument("--alg", default="gus", help="algorithm name")
    parser.add_argument("--run", type=int, default=0, help="run index; same instance as simulate")
    parser.add_argument("--out", default=None, help="write a solution bundle (JSON)")
    parser.add_argument("--random-single-pick", action="store_true")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, out: TextIO) -> int:
    if args.run < 0:
        raise UsageError("--run must be >= 0", argument="--run")
    settings = get_settings()
    names = parse_algorithms(args.alg)
    if len(names) != 1:
        raise UsageError("--alg takes exactly one algorithm", argument="--alg")
    name = names[0]
    config = scenario_from_args(args)
    check_size_guards(config, [name], settings.solver_limits)

    instance = generate_instance(config, instance_seed(args.seed, args.run))
    scheduler = get_scheduler(
        name,
        drop_penalty=args.drop_penalty,
        limits=settings.solver_limits,
        random_retry=not args.random_single_pick,
    )
    rng = None
    if scheduler.is_randomized:
        rng = np.random.default_rng(derive_seed(args.seed, args.run, algorithm_stream(name)))
    schedule = scheduler.schedule(instance, rng)

    out.write(format_schedule(schedule))
    if args.out is not None:
        write_bundle(SolutionBundle(algorithm=name, instance=instance, schedule=schedule), args.out)
    return 0
