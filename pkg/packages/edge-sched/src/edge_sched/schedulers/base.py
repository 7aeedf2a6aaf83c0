"""
Edge Sched - Scheduler Base Interface
=====================================
Abstract base class for MUS schedulers and the types they return.

Every scheduler maps a ProblemInstance to a Schedule: one Assignment per
request (a server/model pair, or a drop) plus the objective

    objective = (sum of US over assigned - drop_penalty * #dropped) / |N|
"""

import math
from abc import ABC, abstractmethod
from collections.abc import Sequence
from enum import Enum
from typing import NamedTuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from edge_sched.model.capacity import CapacityState
from edge_sched.model.satisfaction import meets_thresholds, user_satisfaction
from edge_sched.model.types import ProblemInstance, Request


class Decision(str, Enum):
    """Where a request ends up."""
    LOCAL = "local"
    OFFLOAD_EDGE = "offload_edge"
    OFFLOAD_CLOUD = "offload_cloud"
    DROP = "drop"


class Assignment(BaseModel):
    """Decision for one request, with the accuracy/time/US it realises."""

    model_config = ConfigDict(frozen=True)

    request: int = Field(..., ge=0)
    decision: Decision
    server: int | None = None
    service: int | None = None
    model: int | None = None
    accuracy: float | None = None
    completion: float | None = None
    us: float = 0.0

    @property
    def is_drop(self) -> bool:
        return self.decision is Decision.DROP


class Schedule(BaseModel):
    """Decision vector X for a whole instance."""

    model_config = ConfigDict(frozen=True)

    algorithm: str = ""
    assignments: tuple[Assignment, ...] = ()
    objective: float = 0.0
    satisfied_count: int = 0
    drop_penalty: float = 0.0

    def count(self, decision: Decision) -> int:
        return sum(1 for a in self.assignments if a.decision is decision)

    @property
    def dropped_count(self) -> int:
        return self.count(Decision.DROP)

    @property
    def assigned_count(self) -> int:
        return len(self.assignments) - self.dropped_count


class Option(NamedTuple):
    """One (server, model) way of serving a request, evaluated up front."""

    server: int
    model: int
    accuracy: float
    completion: float
    us: float
    local: bool
    compute_cost: int
    comm_cost: int
    satisfied: bool

    def admissible(self, covering: int, state: CapacityState, strict: bool) -> bool:
        """Candidate test against remaining capacities (inf when relaxed)."""
        if strict and not self.satisfied:
            return False
        if self.compute_cost > state.remaining_compute[self.server]:
            return False
        return self.local or self.comm_cost <= state.remaining_comm[covering]


def rank_options(instance: ProblemInstance, request: Request) -> list[Option]:
    """
    Every hosted (server, model) pair for the request's service, sorted by
    US descending. Ties prefer the local server, then lower server and
    model indices.
    """
    k = request.service
    covering = request.covering_server
    catalog = instance.catalog
    accuracy_row = catalog.accuracy[k]
    compute_row = catalog.compute_cost[k]
    comm_row = catalog.comm_cost[k]
    servers = instance.servers

    options: list[Option] = []
    for j, l in instance.options_by_service.get(k, ()):
        comm = instance.delays.comm_delay(covering, j, request.payload_bytes)
        if comm is None:
            continue
        proc = catalog.proc_delay[servers[j].perf_class][k][l]
        accuracy = accuracy_row[l]
        completion = comm + request.queue_delay + proc
        options.append(
            Option(
                server=j,
                model=l,
                accuracy=accuracy,
                completion=completion,
                us=user_satisfaction(request, accuracy, completion, instance),
                local=j == covering,
                compute_cost=compute_row[l],
                comm_cost=comm_row[l],
                satisfied=meets_thresholds(request, accuracy, completion),
            )
        )
    options.sort(key=lambda o: (-o.us, not o.local, o.server, o.model))
    return options


def compute_objective(
    us_values: Sequence[float],
    n_dropped: int,
    n_requests: int,
    drop_penalty: float = 0.0,
) -> float:
    """Mean US over all requests; ``fsum`` keeps it independent of summation order."""
    if n_requests == 0:
        return 0.0
    return (math.fsum(us_values) - drop_penalty * n_dropped) / n_requests


def decision_key(chosen: Sequence[Option | None]) -> tuple[tuple[int, int, int], ...]:
    """
    Canonical order of decision vectors, used to break ties between equal
    objectives: per request, lower server then lower model, drop last.
    """
    return tuple((0, o.server, o.model) if o is not None else (1, 0, 0) for o in chosen)


def build_schedule(
    instance: ProblemInstance,
    chosen: Sequence[Option | None],
    algorithm: str,
    drop_penalty: float = 0.0,
) -> Schedule:
    """Turn one chosen option (or ``None`` for a drop) per request into a Schedule."""
    assignments: list[Assignment] = []
    satisfied = 0
    for request, option in zip(instance.requests, chosen, strict=True):
        if option is None:
            assignments.append(Assignment(request=request.id, decision=Decision.DROP))
            continue

        if option.local:
            decision = Decision.LOCAL
        elif instance.servers[option.server].is_cloud:
            decision = Decision.OFFLOAD_CLOUD
        else:
            decision = Decision.OFFLOAD_EDGE
        satisfied += option.satisfied
        assignments.append(
            Assignment(
                request=request.id,
                decision=decision,
                server=option.server,
                service=request.service,
                model=option.model,
                accuracy=option.accuracy,
                completion=option.completion,
                us=option.us,
            )
        )

    n_dropped = sum(1 for option in chosen if option is None)
    return Schedule(
        algorithm=algorithm,
        assignments=tuple(assignments),
        objective=compute_objective(
            [o.us for o in chosen if o is not None],
            n_dropped,
            instance.n_requests,
            drop_penalty,
        ),
        satisfied_count=satisfied,
        drop_penalty=drop_penalty,
    )


class Scheduler(ABC):
    """
    Abstract base class for MUS schedulers.

    Implementations own their CapacityState per call and keep no mutable
    state between calls, so one instance can be shared across threads.
    """

    def __init__(self, drop_penalty: float = 0.0) -> None:
        """
        Args:
            drop_penalty: objective cost of each dropped request
        """
        self.drop_penalty = drop_penalty

    @property
    @abstractmethod
    def name(self) -> str:
        """Algorithm identifier used in results and on the command line."""
        ...

    @property
    def is_randomized(self) -> bool:
        return False

    @abstractmethod
    def schedule(
        self,
        instance: ProblemInstance,
        rng: np.random.Generator | None = None,
    ) -> Schedule:
        """
        Produce a feasible schedule for ``instance``.

        Args:
            instance: problem to solve
            rng: random source, used only by randomized schedulers

        Returns:
            Schedule satisfying constraints (2a)-(2f)
        """
        ...
