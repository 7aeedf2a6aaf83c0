"""
Edge Sched - Brute-Force Oracle
===============================
Enumerates every decision vector of a tiny instance and keeps the best
feasible one. Shares nothing with the branch-and-bound search except the
satisfaction model and the objective, so the two can check each other.
"""

import math

import numpy as np
import structlog

from edge_sched.exceptions import InstanceTooLargeError
from edge_sched.model.capacity import CapacityState
from edge_sched.model.satisfaction import completion_time, meets_thresholds, user_satisfaction
from edge_sched.model.types import ProblemInstance, Request
from edge_sched.schedulers.base import (
    Option,
    Schedule,
    Scheduler,
    build_schedule,
    compute_objective,
    decision_key,
)
from edge_sched.schedulers.exact import SolverLimits

logger = structlog.get_logger(__name__)


def decision_vectors(instance: ProblemInstance) -> int:
    """(|M| * |L| + 1) ** |N|: size of the unconstrained search space."""
    per_request = len(instance.servers) * instance.catalog.n_models + 1
    return per_request ** instance.n_requests


def _domain(instance: ProblemInstance, request: Request) -> list[Option]:
    k = request.service
    catalog = instance.catalog
    domain: list[Option] = []
    for server in instance.servers:
        for l in range(catalog.n_models):
            if not server.hosts(k, l):
                continue
            accuracy = catalog.accuracy[k][l]
            completion = completion_time(request, server, k, l, instance)
            satisfied = meets_thresholds(request, accuracy, completion)
            if instance.is_strict and not satisfied:
                continue
            domain.append(
                Option(
                    server=server.id,
                    model=l,
                    accuracy=accuracy,
                    completion=completion,
                    us=user_satisfaction(request, accuracy, completion, instance),
                    local=server.id == request.covering_server,
                    compute_cost=catalog.compute_cost[k][l],
                    comm_cost=catalog.comm_cost[k][l],
                    satisfied=satisfied,
                )
            )
    return domain


class BruteForceScheduler(Scheduler):
    """Exhaustive search; only for instances within ``limits.max_vectors``."""

    def __init__(self, limits: SolverLimits | None = None, drop_penalty: float = 0.0) -> None:
        super().__init__(drop_penalty=drop_penalty)
        self.limits = limits or SolverLimits()

    @property
    def name(self) -> str:
        return "brute-force"

    def schedule(
        self,
        instance: ProblemInstance,
        rng: np.random.Generator | None = None,
    ) -> Schedule:
        size = decision_vectors(instance)
        if size > self.limits.max_vectors:
            raise InstanceTooLargeError(self.name, size, self.limits.max_vectors)

        n = instance.n_requests
        domains = [_domain(instance, r) for r in instance.requests]
        covering = [r.covering_server for r in instance.requests]
        state = CapacityState.from_instance(instance)
        penalty = self.drop_penalty

        path: list[Option | None] = []
        best: list[Option | None] = [None] * n
        best_objective = -math.inf
        best_key: tuple[tuple[int, int, int], ...] = ()
        leaves = 0

        def enumerate_from(i: int) -> None:
            nonlocal best, best_objective, best_key, leaves
            if i == n:
                leaves += 1
                us_values = [o.us for o in path if o is not None]
                objective = compute_objective(us_values, n - len(us_values), n, penalty)
                # equal objectives keep the smaller vector in decision_key order
                if objective > best_objective or (
                    objective == best_objective and decision_key(path) < best_key
                ):
                    best, best_objective, best_key = list(path), objective, decision_key(path)
                return

            for option in [*domains[i], None]:
                if option is None:
                    path.append(None)
                    enumerate_from(i + 1)
                    path.pop()
                    continue
                # a vector that overloads a server stays infeasible whatever follows
                if not state.fits(option.server, covering[i], option.compute_cost, option.comm_cost):
                    continue
                state.charge(option.server, covering[i], option.compute_cost, option.comm_cost)
                path.append(option)
                enumerate_from(i + 1)
                path.pop()
                state.charge(option.server, covering[i], -option.compute_cost, -option.comm_cost)

        enumerate_from(0)
        schedule = build_schedule(instance, best, self.name, penalty)
        logger.debug("Brute-force search finished", vectors=leaves, objective=schedule.objective)
        return schedule


def brute_force(
    instance: ProblemInstance,
    limits: SolverLimits | None = None,
    drop_penalty: float = 0.0,
) -> Schedule:
    """
    Best schedule by exhaustive enumeration.

    Raises:
        InstanceTooLargeError: (|M| * |L| + 1) ** |N| exceeds ``limits.max_vectors``
    """
    return BruteForceScheduler(limits=limits, drop_penalty=drop_penalty).schedule(instance)
