"""
Edge Sched - Schedulers Package
===============================
GUS, the baselines, the exact solvers and the shared schedule validator.
"""

from edge_sched.schedulers.base import (
    Assignment,
    Decision,
    Option,
    Schedule,
    Scheduler,
    build_schedule,
    compute_objective,
    decision_key,
    rank_options,
)
from edge_sched.schedulers.baselines import (
    LocalAllScheduler,
    OffloadAllScheduler,
    RandomAssignmentScheduler,
    local_all,
    offload_all,
    random_assignment,
)
from edge_sched.schedulers.brute_force import BruteForceScheduler, brute_force, decision_vectors
from edge_sched.schedulers.exact import (
    BranchAndBoundScheduler,
    SolverLimits,
    exact_solve,
    problem_size,
)
from edge_sched.schedulers.factory import (
    ALGORITHMS,
    EXACT_ALGORITHMS,
    get_scheduler,
    list_available_schedulers,
    parse_algorithms,
)
from edge_sched.schedulers.greedy import GreedyScheduler, gus, happy_communication, happy_computation
from edge_sched.schedulers.validation import ConstraintViolation, ensure_valid, validate_schedule

__all__ = [
    # Types
    "Assignment",
    "ConstraintViolation",
    "Decision",
    "Option",
    "Schedule",
    "SolverLimits",
    # Schedulers
    "Scheduler",
    "BranchAndBoundScheduler",
    "BruteForceScheduler",
    "GreedyScheduler",
    "LocalAllScheduler",
    "OffloadAllScheduler",
    "RandomAssignmentScheduler",
    # Functions
    "brute_force",
    "build_schedule",
    "compute_objective",
    "decision_key",
    "decision_vectors",
    "ensure_valid",
    "exact_solve",
    "gus",
    "happy_communication",
    "happy_computation",
    "local_all",
    "offload_all",
    "problem_size",
    "random_assignment",
    "rank_options",
    "validate_schedule",
    # Factory
    "ALGORITHMS",
    "EXACT_ALGORITHMS",
    "get_scheduler",
    "list_available_schedulers",
    "parse_algorithms",
]
