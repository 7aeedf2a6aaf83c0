"""
Edge Sched - Simulation Package
===============================
Monte-Carlo runs, parameter sweeps, the framed discrete-event simulation
and the bandwidth estimator it relies on.
"""

from edge_sched.simulation.bandwidth import BandwidthEstimator, update_bandwidth
from edge_sched.simulation.framed import AGGREGATE_RUN, FramedConfig, framed_simulation
from edge_sched.simulation.gap import GapRow, GapSummary, optimality_gap, summarize_gap
from edge_sched.simulation.monte_carlo import (
    algorithm_stream,
    apply_parameter,
    check_size_guards,
    derive_seed,
    evaluate_run,
    instance_seed,
    monte_carlo,
    parse_sweep_parameter,
    resolve_workers,
    sweep,
)
from edge_sched.simulation.results import (
    RunResult,
    SweepParameter,
    SweepPoint,
    SweepSpec,
    aggregate,
    standard_error,
)

__all__ = [
    # Types
    "BandwidthEstimator",
    "FramedConfig",
    "GapRow",
    "GapSummary",
    "RunResult",
    "SweepParameter",
    "SweepPoint",
    "SweepSpec",
    # Functions
    "AGGREGATE_RUN",
    "aggregate",
    "algorithm_stream",
    "apply_parameter",
    "check_size_guards",
    "derive_seed",
    "evaluate_run",
    "instance_seed",
    "framed_simulation",
    "monte_carlo",
    "optimality_gap",
    "parse_sweep_parameter",
    "resolve_workers",
    "standard_error",
    "summarize_gap",
    "sweep",
    "update_bandwidth",
]
