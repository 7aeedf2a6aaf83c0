"""
Edge Sched Package
==================
User-satisfaction driven offloading of deep-learning requests in a
user / edge / cloud system.

Provides:
- The accuracy/delay satisfaction model and problem instance types
- GUS, five baselines, an exact branch-and-bound solver and a brute-force oracle
- A shared validator for the scheduling constraints
- Random scenario generation with built-in presets
- Monte-Carlo runs, parameter sweeps and a framed discrete-event simulation

Usage:
    from edge_sched import generate_instance, get_scheduler, paper_default

    instance = generate_instance(paper_default(), seed=7)
    schedule = get_scheduler("gus").schedule(instance)
"""

from edge_sched.exceptions import EdgeSchedError
from edge_sched.model import ProblemInstance, Request, SchedulingMode, Server, ServerKind
from edge_sched.scenario import ScenarioConfig, generate_instance, get_preset, paper_default
from edge_sched.schedulers import (
    Schedule,
    Scheduler,
    exact_solve,
    get_scheduler,
    gus,
    list_available_schedulers,
    validate_schedule,
)
from edge_sched.simulation import RunResult, framed_simulation, monte_carlo, sweep

__version__ = "0.1.0"

__all__ = [
    "EdgeSchedError",
    "ProblemInstance",
    "Request",
    "RunResult",
    "ScenarioConfig",
    "Schedule",
    "Scheduler",
    "SchedulingMode",
    "Server",
    "ServerKind",
    "exact_solve",
    "framed_simulation",
    "generate_instance",
    "get_preset",
    "get_scheduler",
    "gus",
    "list_available_schedulers",
    "monte_carlo",
    "paper_default",
    "sweep",
    "validate_schedule",
]
