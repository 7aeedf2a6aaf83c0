"""
Edge Sched Simulator - framed
=============================
Time-framed simulation with admission queues and bandwidth estimation.
"""

import argparse
from typing import TextIO

from pydantic import ValidationError

from edge_sched.simulation import AGGREGATE_RUN, FramedConfig, framed_simulation

from app.cli.common import (
    add_scenario_arguments,
    algorithms_from_args,
    emit_summary,
    scenario_from_args,
)
from app.core.config import get_settings
from app.core.exceptions import UsageError
from app.report import write_results
from app.report.summary import format_results


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    defaults = get_settings().framed_defaults
    parser = subparsers.add_parser(
        "framed", help="framed simulation; per-frame rows plus run=-1 aggregates"
    )
    add_scenario_arguments(parser, default_config="testbed")
    parser.add_argument("--algs", default="gus,random,offload-all,local-all")
    parser.add_argument("--out", default=None, help="output file (stdout when omitted)")
    parser.add_argument("--frames", type=int, default=defaults.frames)
    parser.add_argument("--frame-len", type=float, default=defaults.frame_len_ms, help="ms")
    parser.add_argument("--queue-cap", type=int, default=defaults.queue_cap)
    parser.add_argument(
        "--arrival-rate", type=float, default=defaults.arrival_rate, help="requests/s per edge server"
    )
    parser.add_argument("--noise-sigma", type=float, default=defaults.bandwidth_noise_sigma)
    parser.add_argument(
        "--no-retry",
        dest="retry",
        action="store_false",
        default=defaults.retry_rejected,
        help="drop rejected requests instead of re-queueing them once",
    )
    parser.add_argument("--random-single-pick", action="store_true")
    parser.set_defaults(handler=run)


def framed_config_from_args(args: argparse.Namespace) -> FramedConfig:
    try:
        return FramedConfig(
            frames=args.frames,
            frame_len_ms=args.frame_len,
            queue_cap=args.queue_cap,
            arrival_rate=args.arrival_rate,
            bandwidth_noise_sigma=args.noise_sigma,
            retry_rejected=args.retry,
        )
    except ValidationError as e:
        err = e.errors()[0]
        raise UsageError(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}")


def run(args: argparse.Namespace, out: TextIO) -> int:
    settings = get_settings()
    results = framed_simulation(
        scenario_from_args(args),
        algorithms_from_args(args),
        seed=args.seed,
        framed=framed_config_from_args(args),
        drop_penalty=args.drop_penalty,
        limits=settings.solver_limits,
        random_retry=not args.random_single_pick,
    )
    write_results(results, args.out, out)
    emit_summary(format_results([r for r in results if r.run == AGGREGATE_RUN]), args, out)
    return 0
