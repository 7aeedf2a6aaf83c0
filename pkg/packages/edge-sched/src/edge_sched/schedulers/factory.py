"""
Edge Sched - Scheduler Factory
==============================
Maps algorithm names used in configs and on the command line to
Scheduler instances.
"""

from typing import Literal

import structlog

from edge_sched.exceptions import UnknownAlgorithmError
from edge_sched.schedulers.base import Scheduler
from edge_sched.schedulers.baselines import (
    LocalAllScheduler,
    OffloadAllScheduler,
    RandomAssignmentScheduler,
)
from edge_sched.schedulers.brute_force import BruteForceScheduler
from edge_sched.schedulers.exact import BranchAndBoundScheduler, SolverLimits
from edge_sched.schedulers.greedy import GreedyScheduler

logger = structlog.get_logger(__name__)

AlgorithmName = Literal[
    "gus",
    "random",
    "offload-all",
    "local-all",
    "happy-comp",
    "happy-comm",
    "exact",
    "brute-force",
]

ALGORITHMS: tuple[str, ...] = (
    "gus",
    "random",
    "offload-all",
    "local-all",
    "happy-comp",
    "happy-comm",
    "exact",
    "brute-force",
)

EXACT_ALGORITHMS = frozenset({"exact", "brute-force"})


def get_scheduler(
    name: AlgorithmName | str,
    drop_penalty: float = 0.0,
    limits: SolverLimits | None = None,
    random_retry: bool = True,
) -> Scheduler:
    """
    Build the scheduler registered under ``name``.

    Args:
        name: one of ``list_available_schedulers()``
        drop_penalty: objective cost per dropped request
        limits: size guards for exact / brute-force
        random_retry: Random-Assignment tries further servers after a miss

    Returns:
        Configured scheduler

    Raises:
        UnknownAlgorithmError: name is not registered
    """
    match name:
        case "gus":
            return GreedyScheduler(drop_penalty=drop_penalty)
        case "happy-comp":
            return GreedyScheduler(relax_compute=True, drop_penalty=drop_penalty)
        case "happy-comm":
            return GreedyScheduler(relax_comm=True, drop_penalty=drop_penalty)
        case "random":
            return RandomAssignmentScheduler(retry=random_retry, drop_penalty=drop_penalty)
        case "offload-all":
            return OffloadAllScheduler(drop_penalty=drop_penalty)
        case "local-all":
            return LocalAllScheduler(drop_penalty=drop_penalty)
        case "exact":
            return BranchAndBoundScheduler(limits=limits, drop_penalty=drop_penalty)
        case "brute-force":
            return BruteForceScheduler(limits=limits, drop_penalty=drop_penalty)
    raise UnknownAlgorithmError(str(name), list(ALGORITHMS))


def list_available_schedulers() -> list[str]:
    """Algorithm names accepted by ``get_scheduler``."""
    return list(ALGORITHMS)


def parse_algorithms(value: str) -> list[str]:
    """
    Split a comma-separated algorithm list, keeping order and dropping repeats.

    Raises:
        UnknownAlgorithmError: any entry is not registered
    """
    names: list[str] = []
    for raw in value.split(","):
        name = raw.strip()
        if not name:
            continue
        if name not in ALGORITHMS:
            raise UnknownAlgorithmError(name, list(ALGORITHMS))
        if name not in names:
            names.append(name)
    return names
