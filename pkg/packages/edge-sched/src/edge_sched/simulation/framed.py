"""
Edge Sched - Framed Simulation
==============================
Discrete-event simulation of time-framed scheduling on top of simpy.

Requests arrive at each edge server as a Poisson stream and wait in an
admission queue. A queue is handed to the scheduler as one batch when it
reaches ``queue_cap`` or when the frame ends. A request's T_q is the time
it spent queued. Capacities refill at every frame boundary, and the
scheduler sees link bandwidths through per-link estimators that fold in
one noisy observation per frame.

A request the scheduler drops can be re-queued once into the next frame.
Every arrival is counted exactly once, in the frame where its outcome
is final.
"""

import math
from collections.abc import Generator, Sequence
from dataclasses import dataclass, field

import numpy as np
import simpy
import structlog
from pydantic import BaseModel, ConfigDict, Field

from edge_sched.model.types import DelayTable, ModelCatalog, ProblemInstance, Request, Server
from edge_sched.schedulers.base import Decision, Schedule, Scheduler
from edge_sched.schedulers.exact import SolverLimits
from edge_sched.schedulers.factory import get_scheduler, parse_algorithms
from edge_sched.scenario.config import ScenarioConfig
from edge_sched.scenario.generator import (
    build_delay_table,
    build_servers,
    draw_catalog,
    draw_requests,
)
from edge_sched.simulation.bandwidth import BandwidthEstimator, update_bandwidth
from edge_sched.simulation.monte_carlo import algorithm_stream
from edge_sched.simulation.results import RunResult

logger = structlog.get_logger(__name__)

AGGREGATE_RUN = -1

_TOPOLOGY_STREAM = 0
_ARRIVAL_STREAM = 1
_NOISE_STREAM = 2
_SCHEDULER_STREAM = 3


class FramedConfig(BaseModel):
    """Timing, load and feedback parameters of a framed simulation."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    frames: int = Field(default=600, ge=1)
    frame_len_ms: float = Field(default=3000.0, gt=0.0)
    queue_cap: int = Field(default=4, ge=1)
    arrival_rate: float = Field(default=1.0, ge=0.0, description="Requests per second per edge server")
    bandwidth_noise_sigma: float = Field(default=0.2, ge=0.0)
    retry_rejected: bool = True


@dataclass
class _Pending:
    """A request waiting in an admission queue."""
    template: Request
    arrival: float
    retried: bool = False


@dataclass
class _Tally:
    """Outcome counts of finally decided requests."""
    decided: int = 0
    satisfied: int = 0
    local: int = 0
    offload_cloud: int = 0
    offload_edge: int = 0
    dropped: int = 0
    us_values: list[float] = field(default_factory=list)

    def merge(self, other: "_Tally") -> None:
        self.decided += other.decided
        self.satisfied += other.satisfied
        self.local += other.local
        self.offload_cloud += other.offload_cloud
        self.offload_edge += other.offload_edge
        self.dropped += other.dropped
        self.us_values.extend(other.us_values)

    def to_result(self, run: int, algorithm: str, drop_penalty: float, seed: int) -> RunResult:
        objective = 0.0
        if self.decided:
            objective = (math.fsum(self.us_values) - drop_penalty * self.dropped) / self.decided
        return RunResult.from_counts(
            run=run,
            algorithm=algorithm,
            n_requests=self.decided,
            satisfied=self.satisfied,
            local=self.local,
            offload_cloud=self.offload_cloud,
            offload_edge=self.offload_edge,
            dropped=self.dropped,
            objective=objective,
            seed=seed,
        )


@dataclass(frozen=True)
class _Topology:
    """Static part of the system, shared by every algorithm."""
    servers: tuple[Server, ...]
    catalog: ModelCatalog
    true_delays: DelayTable
    arrivals: tuple[tuple[tuple[float, Request], ...], ...]


def draw_topology(config: ScenarioConfig, framed: FramedConfig, seed: int) -> _Topology:
    """Catalog, servers, links and the arrival trace of every edge server."""
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(_TOPOLOGY_STREAM,)))
    catalog = draw_catalog(config, rng)
    servers = build_servers(config, rng)
    delays = build_delay_table(servers, config.edge_bandwidth, config.cloud_bandwidth)

    arrival_rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(_ARRIVAL_STREAM,)))
    horizon = framed.frames * framed.frame_len_ms
    rate_per_ms = framed.arrival_rate / 1000.0
    traces: list[tuple[tuple[float, Request], ...]] = []
    for edge in range(config.n_edge_servers):
        times: list[float] = []
        t = 0.0
        while rate_per_ms > 0:
            t += float(arrival_rng.exponential(1.0 / rate_per_ms))
            if t >= horizon:
                break
            times.append(t)
        templates = draw_requests(config, arrival_rng, n_requests=len(times))
        traces.append(
            tuple(
                (at, request.model_copy(update={"covering_server": edge}))
                for at, request in zip(times, templates)
            )
        )

    return _Topology(servers=servers, catalog=catalog, true_delays=delays, arrivals=tuple(traces))


class _FramedRun:
    """One algorithm driven through the whole simulation."""

    def __init__(
        self,
        config: ScenarioConfig,
        framed: FramedConfig,
        topology: _Topology,
        scheduler: Scheduler,
        rng: np.random.Generator | None,
        noise_rng: np.random.Generator,
        seed: int,
    ) -> None:
        self.config = config
        self.framed = framed
        self.topology = topology
        self.scheduler = scheduler
        self.rng = rng
        self.noise_rng = noise_rng
        self.seed = seed

        n_servers = len(topology.servers)
        self.queues: list[list[_Pending]] = [[] for _ in range(config.n_edge_servers)]
        self.retries: list[_Pending] = []
        self.estimators: dict[tuple[int, int], BandwidthEstimator] = {}
        for a in range(n_servers):
            for b in range(n_servers):
                bw = topology.true_delays.bandwidth[a][b]
                if bw is not None:
                    self.estimators[(a, b)] = BandwidthEstimator.initial(bw)

        self.frame = 0
        self.frame_tally = _Tally()
        self.total = _Tally()
        self.results: list[RunResult] = []
        self._start_frame()

    # =========================================================================
    # Frame bookkeeping
    # =========================================================================

    def _start_frame(self) -> None:
        self.remaining_compute = [s.compute_capacity for s in self.topology.servers]
        self.remaining_comm = [s.comm_capacity for s in self.topology.servers]
        self.delays = self._estimated_delays()
        self.max_completion = self._frame_max_completion()

    def _estimated_delays(self) -> DelayTable:
        n = len(self.topology.servers)
        return DelayTable(
            bandwidth=tuple(
                tuple(
                    self.estimators[(a, b)].current if (a, b) in self.estimators else None
                    for b in range(n)
                )
                for a in range(n)
            )
        )

    def _frame_max_completion(self) -> float:
        """Worst completion time reachable this frame under the current estimates."""
        wait_bound = self.framed.frame_len_ms * (2 if self.framed.retry_rejected else 1)
        transfer = 0.0
        if self.estimators:
            slowest_link = min(e.current for e in self.estimators.values())
            transfer = (math.ceil(self.config.payload.upper) + 1) / slowest_link
        slowest_proc = max(
            (d for table in self.topology.catalog.proc_delay.values() for row in table for d in row),
            default=0.0,
        )
        worst = (transfer + wait_bound + slowest_proc) * (1 + 1e-9)
        return max(self.config.max_completion, self.config.requested_delay.upper, worst)

    def _observe_links(self) -> None:
        sigma = self.framed.bandwidth_noise_sigma
        for (a, b), estimator in sorted(self.estimators.items()):
            true_bw = self.topology.true_delays.bandwidth[a][b]
            observed = float(true_bw) * float(self.noise_rng.lognormal(0.0, sigma))  # type: ignore[arg-type]
            self.estimators[(a, b)] = update_bandwidth(estimator, observed)

    def close_frame(self, now: float) -> None:
        for edge in range(len(self.queues)):
            if self.queues[edge]:
                self.dispatch(edge, now)

        last = self.frame == self.framed.frames - 1
        if last:
            for _ in self.retries:
                self.frame_tally.decided += 1
                self.frame_tally.dropped += 1
            self.retries = []

        if self.frame_tally.decided:
            self.results.append(
                self.frame_tally.to_result(
                    self.frame, self.scheduler.name, self.scheduler.drop_penalty, self.seed
                )
            )
        self.total.merge(self.frame_tally)
        self.frame_tally = _Tally()

        if last:
            return
        self.frame += 1
        self._observe_links()
        self._start_frame()

        retries, self.retries = self.retries, []
        for pending in retries:
            self.enqueue(pending, now)

    # =========================================================================
    # Queues and batches
    # =========================================================================

    def enqueue(self, pending: _Pending, now: float) -> None:
        edge = pending.template.covering_server
        self.queues[edge].append(pending)
        if len(self.queues[edge]) >= self.framed.queue_cap:
            self.dispatch(edge, now)

    def dispatch(self, edge: int, now: float) -> None:
        batch, self.queues[edge] = self.queues[edge], []
        requests = tuple(
            p.template.model_copy(update={"id": i, "queue_delay": max(now - p.arrival, 0.0)})
            for i, p in enumerate(batch)
        )
        servers = tuple(
            s.model_copy(
                update={
                    "compute_capacity": max(self.remaining_compute[s.id], 0),
                    "comm_capacity": max(self.remaining_comm[s.id], 0),
                }
            )
            for s in self.topology.servers
        )
        instance = ProblemInstance(
            requests=requests,
            servers=servers,
            catalog=self.topology.catalog,
            delays=self.delays,
            max_accuracy=max(self.config.max_accuracy, self.topology.catalog.max_accuracy),
            max_completion=self.max_completion,
            mode=self.config.mode,
        )
        schedule = self.scheduler.schedule(instance, self.rng)
        self._record(batch, instance, schedule)

    def _record(self, batch: list[_Pending], instance: ProblemInstance, schedule: Schedule) -> None:
        catalog = self.topology.catalog
        tally = self.frame_tally
        for pending, assignment, request in zip(batch, schedule.assignments, instance.requests, strict=True):
            if assignment.decision is Decision.DROP:
                if self.framed.retry_rejected and not pending.retried:
                    pending.retried = True
                    self.retries.append(pending)
                    continue
                tally.decided += 1
                tally.dropped += 1
                continue

            j, k, l = assignment.server, request.service, assignment.model
            assert j is not None and l is not None
            self.remaining_compute[j] -= catalog.compute_cost[k][l]
            if j != request.covering_server:
                self.remaining_comm[request.covering_server] -= catalog.comm_cost[k][l]

            tally.decided += 1
            tally.us_values.append(assignment.us)
            tally.satisfied += (
                assignment.accuracy is not None
                and assignment.completion is not None
                and assignment.accuracy >= request.min_accuracy
                and assignment.completion <= request.max_completion
            )
            match assignment.decision:
                case Decision.LOCAL:
                    tally.local += 1
                case Decision.OFFLOAD_CLOUD:
                    tally.offload_cloud += 1
                case Decision.OFFLOAD_EDGE:
                    tally.offload_edge += 1

    # =========================================================================
    # simpy processes
    # =========================================================================

    def arrivals(self, env: simpy.Environment, edge: int) -> Generator[simpy.Event, None, None]:
        for at, template in self.topology.arrivals[edge]:
            yield env.timeout(at - env.now)
            self.enqueue(_Pending(template=template, arrival=env.now), env.now)

    def clock(self, env: simpy.Environment) -> Generator[simpy.Event, None, None]:
        for _ in range(self.framed.frames):
            yield env.timeout(self.framed.frame_len_ms)
            self.close_frame(env.now)

    def run(self) -> None:
        env = simpy.Environment()
        for edge in range(len(self.queues)):
            env.process(self.arrivals(env, edge))
        env.process(self.clock(env))
        env.run()


def framed_simulation(
    config: ScenarioConfig,
    algorithms: Sequence[str],
    seed: int = 0,
    framed: FramedConfig | None = None,
    drop_penalty: float = 0.0,
    limits: SolverLimits | None = None,
    random_retry: bool = True,
) -> list[RunResult]:
    """
    Simulate framed batch scheduling for every algorithm on the same arrivals.

    Args:
        config: topology, catalog and request distributions (its n_requests
            and queue_delay are not used; arrivals and waits come from the
            simulation)
        algorithms: scheduler names
        seed: root of every random stream
        framed: frames, frame length, queue cap, arrival rate, noise, retry
        drop_penalty: objective cost per dropped request
        limits: exact / brute-force guards, applied per batch
        random_retry: Random-Assignment tries further servers after a miss

    Returns:
        Per-frame RunResults (run = frame index, frames without decided
        requests omitted) ordered by frame then algorithm, followed by one
        aggregate RunResult per algorithm with run = -1. Empty when nothing
        arrives.
    """
    framed = framed or FramedConfig()
    names = sorted(parse_algorithms(",".join(algorithms)))
    topology = draw_topology(config, framed, seed)
    if not any(topology.arrivals):
        logger.info("Framed simulation saw no arrivals", frames=framed.frames)
        return []

    per_frame: list[RunResult] = []
    aggregates: list[RunResult] = []
    for name in names:
        scheduler = get_scheduler(
            name, drop_penalty=drop_penalty, limits=limits, random_retry=random_retry
        )
        rng = None
        if scheduler.is_randomized:
            stream = np.random.SeedSequence(seed, spawn_key=(_SCHEDULER_STREAM, algorithm_stream(name)))
            rng = np.random.default_rng(stream)
        noise_rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(_NOISE_STREAM,)))
        simulation = _FramedRun(config, framed, topology, scheduler, rng, noise_rng, seed)
        simulation.run()
        per_frame.extend(simulation.results)
        aggregates.append(simulation.total.to_result(AGGREGATE_RUN, name, drop_penalty, seed))

    per_frame.sort(key=lambda r: (r.run, r.algorithm))
    logger.info(
        "Framed simulation completed",
        frames=framed.frames,
        arrivals=sum(len(a) for a in topology.arrivals),
        algorithms=names,
    )
    return per_frame + aggregates
