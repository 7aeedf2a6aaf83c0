"""
Edge Sched Simulator - Shared CLI Options
=========================================
Arguments shared by several subcommands and their conversion to library
objects.
"""

import argparse
from typing import TextIO

from edge_sched.model import SchedulingMode
from edge_sched.scenario import ScenarioConfig
from edge_sched.schedulers import parse_algorithms

from app.core.config import get_settings
from app.report import load_config

DEFAULT_ALGORITHMS = "gus,random,offload-all,local-all,happy-comp,happy-comm"


def add_scenario_arguments(parser: argparse.ArgumentParser, default_config: str) -> None:
    settings = get_settings()
    parser.add_argument(
        "--config",
        default=default_config,
        help="JSON config path or preset name (paper_default, testbed, small)",
    )
    parser.add_argument("--seed", type=int, default=settings.DEFAULT_SEED, help="base seed")
    parser.add_argument(
        "--mode",
        choices=[m.value for m in SchedulingMode],
        default=None,
        help="override the config's scheduling mode",
    )
    parser.add_argument(
        "--drop-penalty",
        type=float,
        default=settings.DROP_PENALTY,
        help="objective cost per dropped request (0 disables)",
    )


def add_run_arguments(parser: argparse.ArgumentParser, default_algs: str = DEFAULT_ALGORITHMS) -> None:
    parser.add_argument("--runs", type=int, default=get_settings().DEFAULT_RUNS, help="runs per point")
    parser.add_argument("--algs", default=default_algs, help="comma-separated algorithm names")
    parser.add_argument("--out", default=None, help="output file (stdout when omitted)")
    parser.add_argument(
        "--random-single-pick",
        action="store_true",
        help="Random-Assignment tries one random server only",
    )


def scenario_from_args(args: argparse.Namespace) -> ScenarioConfig:
    """Loaded config with the ``--mode`` override applied."""
    config = load_config(args.config)
    if args.mode is not None and args.mode != config.mode.value:
        config = config.with_overrides(mode=SchedulingMode(args.mode))
    return config


def algorithms_from_args(args: argparse.Namespace) -> list[str]:
    return parse_algorithms(args.algs)


def emit_summary(text: str, args: argparse.Namespace, out: TextIO) -> None:
    """Summaries go to stdout only when the table itself went to a file."""
    if args.out is not None:
        out.write(text)
