"""Edge Sched Simulator - subcommands."""

from app.cli import compare, framed, simulate, solve, sweep, validate

COMMANDS = (simulate, sweep, framed, solve, validate, compare)

__all__ = ["COMMANDS"]
