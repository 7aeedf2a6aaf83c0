"""
Edge Sched - Baseline Schedulers
================================
Reference heuristics GUS is compared against:

- Random-Assignment: servers examined in random order
- Offload-All: every request goes to a cloud server
- Local Processing-All: every request stays on its covering edge server
"""

from abc import abstractmethod

import numpy as np
import structlog

from edge_sched.model.capacity import CapacityState
from edge_sched.model.types import ProblemInstance
from edge_sched.schedulers.base import Option, Schedule, Scheduler, build_schedule, rank_options

logger = structlog.get_logger(__name__)


def _first_admissible(
    options: list[Option],
    covering: int,
    state: CapacityState,
    strict: bool,
) -> Option | None:
    for option in options:
        if option.admissible(covering, state, strict):
            return option
    return None


class _FilteredGreedyScheduler(Scheduler):
    """Best-US admissible option among those a baseline is allowed to use."""

    @abstractmethod
    def accepts(self, instance: ProblemInstance, option: Option) -> bool:
        """Whether the baseline may use this option at all."""
        ...

    def schedule(
        self,
        instance: ProblemInstance,
        rng: np.random.Generator | None = None,
    ) -> Schedule:
        state = CapacityState.from_instance(instance)
        strict = instance.is_strict
        chosen: list[Option | None] = []

        for request in instance.requests:
            options = [o for o in rank_options(instance, request) if self.accepts(instance, o)]
            pick = _first_admissible(options, request.covering_server, state, strict)
            if pick is not None:
                state.charge(pick.server, request.covering_server, pick.compute_cost, pick.comm_cost)
            chosen.append(pick)

        schedule = build_schedule(instance, chosen, self.name, self.drop_penalty)
        logger.debug(
            "Baseline schedule built",
            algorithm=self.name,
            assigned=schedule.assigned_count,
            objective=schedule.objective,
        )
        return schedule


class OffloadAllScheduler(_FilteredGreedyScheduler):
    """Edge servers only forward; every request is served in the cloud."""

    @property
    def name(self) -> str:
        return "offload-all"

    def accepts(self, instance: ProblemInstance, option: Option) -> bool:
        return instance.servers[option.server].is_cloud


class LocalAllScheduler(_FilteredGreedyScheduler):
    """No offloading; only the covering edge server may serve a request."""

    @property
    def name(self) -> str:
        return "local-all"

    def accepts(self, instance: ProblemInstance, option: Option) -> bool:
        return option.local


class RandomAssignmentScheduler(Scheduler):
    """
    Examine servers in a uniformly random order and take the best admissible
    model on the first server that has one.

    With ``retry=False`` only a single random server is tried and the
    request is dropped if it cannot serve it.
    """

    def __init__(self, seed: int = 0, retry: bool = True, drop_penalty: float = 0.0) -> None:
        super().__init__(drop_penalty=drop_penalty)
        self.seed = seed
        self.retry = retry

    @property
    def name(self) -> str:
        return "random"

    @property
    def is_randomized(self) -> bool:
        return True

    def schedule(
        self,
        instance: ProblemInstance,
        rng: np.random.Generator | None = None,
    ) -> Schedule:
        rng = rng if rng is not None else np.random.default_rng(self.seed)
        state = CapacityState.from_instance(instance)
        strict = instance.is_strict
        n_servers = len(instance.servers)
        chosen: list[Option | None] = []

        for request in instance.requests:
            by_server: dict[int, list[Option]] = {}
            for option in rank_options(instance, request):
                by_server.setdefault(option.server, []).append(option)

            order = rng.permutation(n_servers)
            if not self.retry:
                order = order[:1]

            pick: Option | None = None
            for j in order:
                pick = _first_admissible(
                    by_server.get(int(j), []), request.covering_server, state, strict
                )
                if pick is not None:
                    break
            if pick is not None:
                state.charge(pick.server, request.covering_server, pick.compute_cost, pick.comm_cost)
            chosen.append(pick)

        return build_schedule(instance, chosen, self.name, self.drop_penalty)


def random_assignment(
    instance: ProblemInstance,
    rng: np.random.Generator,
    retry: bool = True,
    drop_penalty: float = 0.0,
) -> Schedule:
    """Random-Assignment baseline driven by ``rng``."""
    return RandomAssignmentScheduler(retry=retry, drop_penalty=drop_penalty).schedule(instance, rng)


def offload_all(instance: ProblemInstance, drop_penalty: float = 0.0) -> Schedule:
    """Offload-All baseline."""
    return OffloadAllScheduler(drop_penalty=drop_penalty).schedule(instance)


def local_all(instance: ProblemInstance, drop_penalty: float = 0.0) -> Schedule:
    """Local Processing-All baseline."""
    return LocalAllScheduler(drop_penalty=drop_penalty).schedule(instance)
