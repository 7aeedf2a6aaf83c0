"""
Edge Sched - Greedy User Satisfaction (GUS)
===========================================
Per request, in arrival order: rank every server hosting the requested
service by US, then take the first (server, model) pair that passes the
candidate test with the capacity still left. Drop the request when no
pair qualifies.

The happy baselines are the same walk with one capacity check removed.
Worst case O(|N| * (|L||M|)^2); in practice the per-request sort dominates.
"""

import numpy as np
import structlog

from edge_sched.model.capacity import CapacityState
from edge_sched.model.types import ProblemInstance
from edge_sched.schedulers.base import Option, Schedule, Scheduler, build_schedule, rank_options

logger = structlog.get_logger(__name__)


class GreedyScheduler(Scheduler):
    """GUS, optionally with the computation or communication constraint relaxed."""

    def __init__(
        self,
        relax_compute: bool = False,
        relax_comm: bool = False,
        drop_penalty: float = 0.0,
    ) -> None:
        super().__init__(drop_penalty=drop_penalty)
        self.relax_compute = relax_compute
        self.relax_comm = relax_comm

    @property
    def name(self) -> str:
        if self.relax_compute and self.relax_comm:
            return "happy-both"
        if self.relax_compute:
            return "happy-comp"
        if self.relax_comm:
            return "happy-comm"
        return "gus"

    def schedule(
        self,
        instance: ProblemInstance,
        rng: np.random.Generator | None = None,
    ) -> Schedule:
        state = CapacityState.from_instance(
            instance,
            relax_compute=self.relax_compute,
            relax_comm=self.relax_comm,
        )
        strict = instance.is_strict
        chosen: list[Option | None] = []

        for request in instance.requests:
            covering = request.covering_server
            pick: Option | None = None
            # sorted once per request; capacities do not change inside the loop
            for option in rank_options(instance, request):
                if option.admissible(covering, state, strict):
                    pick = option
                    break
            if pick is not None:
                state.charge(pick.server, covering, pick.compute_cost, pick.comm_cost)
            chosen.append(pick)

        schedule = build_schedule(instance, chosen, self.name, self.drop_penalty)
        logger.debug(
            "Greedy schedule built",
            algorithm=self.name,
            requests=instance.n_requests,
            assigned=schedule.assigned_count,
            objective=schedule.objective,
        )
        return schedule


def gus(instance: ProblemInstance, drop_penalty: float = 0.0) -> Schedule:
    """Greedy User Satisfaction schedule."""
    return GreedyScheduler(drop_penalty=drop_penalty).schedule(instance)


def happy_computation(instance: ProblemInstance, drop_penalty: float = 0.0) -> Schedule:
    """GUS without the computation-capacity check."""
    return GreedyScheduler(relax_compute=True, drop_penalty=drop_penalty).schedule(instance)


def happy_communication(instance: ProblemInstance, drop_penalty: float = 0.0) -> Schedule:
    """GUS without the communication-capacity check."""
    return GreedyScheduler(relax_comm=True, drop_penalty=drop_penalty).schedule(instance)
