"""
Edge Sched Simulator - Error Handler
====================================
Maps every failure of a subcommand to a diagnostic on stderr and an exit
code.
"""

import sys
from collections.abc import Callable
from typing import TextIO

import structlog

from edge_sched.exceptions import EdgeSchedError

logger = structlog.get_logger(__name__)


def run_guarded(command: Callable[[], int], stderr: TextIO | None = None) -> int:
    """
    Run ``command`` and convert exceptions to exit codes.

    EdgeSchedError subclasses carry their own exit code; anything else
    exits with 1.
    """
    stderr = stderr or sys.stderr
    try:
        return command()

    except EdgeSchedError as e:
        logger.warning(
            "Command failed",
            error_code=e.code,
            error_message=e.message,
            exit_code=e.exit_code,
        )
        stderr.write(f"error: {e.message}\n")
        for item in e.details.get("errors", []):
            loc = ".".join(str(p) for p in item.get("loc", [])) or "<root>"
            stderr.write(f"  {loc}: {item.get('msg', '')}\n")
        return e.exit_code

    except Exception as e:
        logger.exception(
            "Unexpected error",
            error=str(e),
            error_type=type(e).__name__,
        )
        stderr.write(f"error: unexpected {type(e).__name__}: {e}\n")
        return 1
