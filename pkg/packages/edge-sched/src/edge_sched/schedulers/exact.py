"""
Edge Sched - Exact Solver
=========================
Depth-first branch-and-bound for the MUS integer program.

Each request branches over its feasible (server, model) pairs in US order,
then over "drop". The optimistic bound for a subtree is the running total
plus, for every remaining request, its best US ignoring capacities. Since
capacities only ever remove options, the bound is admissible.

Branching in US order means the first leaf reached is the GUS schedule,
so the incumbent starts out at the greedy value. Subtrees are pruned only
when their bound falls strictly short of the incumbent, and leaves with an
equal objective are ranked by decision_key, so ties resolve to the same
vector the brute-force oracle picks.
"""

import math
import sys

import numpy as np
import structlog
from pydantic import BaseModel, Field

from edge_sched.exceptions import InstanceTooLargeError, SolverBudgetExceededError
from edge_sched.model.capacity import CapacityState
from edge_sched.model.types import ProblemInstance
from edge_sched.schedulers.base import (
    Option,
    Schedule,
    Scheduler,
    build_schedule,
    compute_objective,
    decision_key,
    rank_options,
)

logger = structlog.get_logger(__name__)

PRUNE_EPSILON = 1e-9


class SolverLimits(BaseModel):
    """Size guards and search budget for the exact solvers."""

    max_variables: int = Field(default=400, gt=0)
    node_limit: int = Field(default=2_000_000, gt=0)
    max_vectors: int = Field(default=10**7, gt=0)


def problem_size(instance: ProblemInstance) -> int:
    """|N| * |M| * |L|, the number of binary decision variables per service."""
    return instance.n_requests * len(instance.servers) * instance.catalog.n_models


class _Search:
    """Mutable state of one branch-and-bound run."""

    def __init__(self, instance: ProblemInstance, limits: SolverLimits, drop_penalty: float) -> None:
        self.instance = instance
        self.limits = limits
        self.drop_penalty = drop_penalty
        self.n = instance.n_requests
        self.covering = [r.covering_server for r in instance.requests]
        self.state = CapacityState.from_instance(instance)
        self.strict = instance.is_strict

        self.domains: list[list[Option]] = []
        best: list[float] = []
        for request in instance.requests:
            options = rank_options(instance, request)
            if self.strict:
                options = [o for o in options if o.satisfied]
            self.domains.append(options)
            best.append(max(-drop_penalty, options[0].us) if options else -drop_penalty)

        # suffix[i] = optimistic value of requests i..n-1
        self.suffix = [0.0] * (self.n + 1)
        for i in range(self.n - 1, -1, -1):
            self.suffix[i] = self.suffix[i + 1] + best[i]

        self.path: list[Option | None] = []
        self.running = 0.0
        self.nodes = 0
        self.incumbent: list[Option | None] | None = None
        self.incumbent_objective = -math.inf
        self.incumbent_total = -math.inf
        self.incumbent_key: tuple[tuple[int, int, int], ...] = ()

    def run(self) -> None:
        limit = sys.getrecursionlimit()
        if limit < self.n + 100:
            sys.setrecursionlimit(self.n + 100)
        try:
            self._visit(0)
        finally:
            sys.setrecursionlimit(limit)

    def _visit(self, i: int) -> None:
        self.nodes += 1
        if self.nodes > self.limits.node_limit:
            raise SolverBudgetExceededError(self.limits.node_limit, self.best_schedule())

        if i == self.n:
            self._leaf()
            return
        if self.running + self.suffix[i] - self.incumbent_total < -PRUNE_EPSILON:
            return

        covering = self.covering[i]
        remaining_compute = self.state.remaining_compute
        remaining_comm = self.state.remaining_comm
        for option in self.domains[i]:
            if not option.admissible(covering, self.state, self.strict):
                continue
            remaining_compute[option.server] -= option.compute_cost
            if not option.local:
                remaining_comm[covering] -= option.comm_cost
            self.path.append(option)
            self.running += option.us

            self._visit(i + 1)

            self.running -= option.us
            self.path.pop()
            if not option.local:
                remaining_comm[covering] += option.comm_cost
            remaining_compute[option.server] += option.compute_cost

            if self.running + self.suffix[i] - self.incumbent_total < -PRUNE_EPSILON:
                return

        self.path.append(None)
        self.running -= self.drop_penalty
        self._visit(i + 1)
        self.running += self.drop_penalty
        self.path.pop()

    def _leaf(self) -> None:
        us_values = [o.us for o in self.path if o is not None]
        n_dropped = self.n - len(us_values)
        objective = compute_objective(us_values, n_dropped, self.n, self.drop_penalty)
        if objective < self.incumbent_objective:
            return
        key = decision_key(self.path)
        if objective > self.incumbent_objective or key < self.incumbent_key:
            self.incumbent = list(self.path)
            self.incumbent_key = key
            self.incumbent_objective = objective
            self.incumbent_total = math.fsum(us_values) - self.drop_penalty * n_dropped

    def best_schedule(self, algorithm: str = "exact") -> Schedule:
        chosen = self.incumbent if self.incumbent is not None else [None] * self.n
        return build_schedule(self.instance, chosen, algorithm, self.drop_penalty)


class BranchAndBoundScheduler(Scheduler):
    """Optimal MUS schedule by depth-first branch-and-bound."""

    def __init__(self, limits: SolverLimits | None = None, drop_penalty: float = 0.0) -> None:
        super().__init__(drop_penalty=drop_penalty)
        self.limits = limits or SolverLimits()

    @property
    def name(self) -> str:
        return "exact"

    def schedule(
        self,
        instance: ProblemInstance,
        rng: np.random.Generator | None = None,
    ) -> Schedule:
        size = problem_size(instance)
        if size > self.limits.max_variables:
            raise InstanceTooLargeError(self.name, size, self.limits.max_variables)

        search = _Search(instance, self.limits, self.drop_penalty)
        search.run()
        schedule = search.best_schedule(self.name)
        logger.debug(
            "Exact schedule proven optimal",
            requests=instance.n_requests,
            nodes=search.nodes,
            objective=schedule.objective,
        )
        return schedule


def exact_solve(
    instance: ProblemInstance,
    limits: SolverLimits | None = None,
    drop_penalty: float = 0.0,
) -> Schedule:
    """
    Maximise the MUS objective exactly.

    Args:
        instance: problem to solve
        limits: size guard and node budget (defaults: 400 variables, 2M nodes)
        drop_penalty: objective cost of each dropped request

    Returns:
        An optimal Schedule

    Raises:
        InstanceTooLargeError: |N| * |M| * |L| exceeds ``limits.max_variables``
        SolverBudgetExceededError: node limit hit; ``.incumbent`` holds the best
            schedule found so far, not proven optimal
    """
    return BranchAndBoundScheduler(limits=limits, drop_penalty=drop_penalty).schedule(instance)
