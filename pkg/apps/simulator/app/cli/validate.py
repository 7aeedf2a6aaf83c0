"""
Edge Sched Simulator - validate
===============================
Re-check a saved solution bundle against every scheduling constraint.
"""

import argparse
from typing import TextIO

from edge_sched.exceptions import ScheduleValidationError
from edge_sched.schedulers import validate_schedule

from app.core.config import get_settings
from app.report import load_bundle
from app.report.summary import format_violations


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser("validate", help="check a solution bundle; exit 4 when invalid")
    parser.add_argument("bundle", help="bundle written by 'solve --out'")
    parser.add_argument(
        "--drop-penalty",
        type=float,
        default=get_settings().DROP_PENALTY,
        help="penalty the schedule's objective was computed with",
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, out: TextIO) -> int:
    bundle = load_bundle(args.bundle)
    violations = validate_schedule(bundle.instance, bundle.schedule, drop_penalty=args.drop_penalty)
    if violations:
        out.write(format_violations(violations))
        raise ScheduleValidationError(violations)

    n = len(bundle.schedule.assignments)
    out.write(f"valid: {n} assignments, objective {bundle.schedule.objective:.6f}\n")
    return 0
