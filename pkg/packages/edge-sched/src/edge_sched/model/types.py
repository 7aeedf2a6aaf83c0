"""
Edge Sched - Domain Types
=========================
Immutable pydantic models describing one MUS problem: requests, servers,
the model catalog, link bandwidths and the full problem instance.

Indices are positional: ``requests[i].id == i`` and ``servers[j].id == j``.
Accuracies are fractions in [0, 1]; times are milliseconds.
"""

from collections import defaultdict
from enum import Enum
from functools import cached_property
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from edge_sched.exceptions import InvalidInstanceError


class ServerKind(str, Enum):
    """Tier a server belongs to."""
    EDGE = "edge"
    CLOUD = "cloud"


class SchedulingMode(str, Enum):
    """Whether accuracy/delay thresholds are hard constraints."""
    STRICT = "strict"
    SOFT = "soft"


class Request(BaseModel):
    """One user demand for a deep-learning service."""

    model_config = ConfigDict(frozen=True)

    id: int = Field(..., ge=0, description="Request index i")
    service: int = Field(..., ge=0, description="Requested service k")
    min_accuracy: float = Field(..., ge=0.0, le=1.0, description="A_i, fraction")
    max_completion: float = Field(..., ge=0.0, description="C_i in ms")
    weight_accuracy: float = Field(default=1.0, ge=0.0, le=1.0, description="w_ai")
    weight_time: float = Field(default=1.0, ge=0.0, le=1.0, description="w_ci")
    covering_server: int = Field(..., ge=0, description="Edge server s_i receiving the request")
    payload_bytes: int = Field(default=0, ge=0, description="Bytes sent when offloaded")
    queue_delay: float = Field(default=0.0, ge=0.0, description="T_q in ms")


class Server(BaseModel):
    """An edge or cloud node with per-frame capacities and hosted models."""

    model_config = ConfigDict(frozen=True)

    id: int = Field(..., ge=0, description="Server index j")
    kind: ServerKind
    compute_capacity: int = Field(..., ge=0, description="gamma_j, capacity units")
    comm_capacity: int = Field(..., ge=0, description="eta_j, capacity units")
    perf_class: str = Field(..., min_length=1, description="Processing-delay profile key")
    hosted: tuple[tuple[int, int], ...] = Field(
        default=(), description="Sorted (service, model) pairs placed on this server"
    )

    @field_validator("hosted")
    @classmethod
    def _sort_hosted(cls, value: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(set(value)))

    @cached_property
    def hosted_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.hosted)

    @property
    def is_cloud(self) -> bool:
        return self.kind is ServerKind.CLOUD

    def hosts(self, service: int, model: int) -> bool:
        """Check whether (service, model) is placed on this server."""
        return (service, model) in self.hosted_set


class ModelCatalog(BaseModel):
    """
    Per (service, model) accuracy and costs, and per performance class
    processing delays. All tables are indexed ``[k][l]``.
    """

    model_config = ConfigDict(frozen=True)

    accuracy: tuple[tuple[float, ...], ...]
    proc_delay: dict[str, tuple[tuple[float, ...], ...]]
    compute_cost: tuple[tuple[int, ...], ...]
    comm_cost: tuple[tuple[int, ...], ...]

    @property
    def n_services(self) -> int:
        return len(self.accuracy)

    @property
    def n_models(self) -> int:
        return len(self.accuracy[0]) if self.accuracy else 0

    @model_validator(mode="after")
    def _check_tables(self) -> Self:
        shape = (self.n_services, self.n_models)
        tables: dict[str, tuple[tuple[float, ...], ...]] = {
            "accuracy": self.accuracy,
            "compute_cost": tuple(tuple(float(x) for x in row) for row in self.compute_cost),
            "comm_cost": tuple(tuple(float(x) for x in row) for row in self.comm_cost),
        }
        for perf_class, table in self.proc_delay.items():
            tables[f"proc_delay[{perf_class}]"] = table

        for name, table in tables.items():
            if len(table) != shape[0] or any(len(row) != shape[1] for row in table):
                raise ValueError(f"{name} must be a {shape[0]}x{shape[1]} table")
            if any(x < 0 for row in table for x in row):
                raise ValueError(f"{name} contains negative values")
        if any(a > 1.0 for row in self.accuracy for a in row):
            raise ValueError("accuracy values must be fractions in [0, 1]")
        return self

    @cached_property
    def max_accuracy(self) -> float:
        return max((a for row in self.accuracy for a in row), default=0.0)


class DelayTable(BaseModel):
    """
    Link bandwidths in bytes/ms between servers. ``None`` marks an
    unconnected pair; the diagonal is ignored (local processing).
    """

    model_config = ConfigDict(frozen=True)

    bandwidth: tuple[tuple[float | None, ...], ...]

    @model_validator(mode="after")
    def _check_matrix(self) -> Self:
        size = len(self.bandwidth)
        for j, row in enumerate(self.bandwidth):
            if len(row) != size:
                raise ValueError("bandwidth must be a square matrix")
            for jj, value in enumerate(row):
                if j != jj and value is not None and value <= 0:
                    raise ValueError(f"bandwidth[{j}][{jj}] must be positive")
        return self

    def connected(self, source: int, target: int) -> bool:
        return source == target or self.bandwidth[source][target] is not None

    def unit_delay(self, source: int, target: int) -> float | None:
        """Milliseconds per byte on the link, ``None`` when unconnected."""
        if source == target:
            return 0.0
        bw = self.bandwidth[source][target]
        return None if bw is None else 1.0 / bw

    def comm_delay(self, source: int, target: int, payload_bytes: int) -> float | None:
        """Transfer time of a payload in ms, ``None`` when unconnected."""
        if source == target:
            return 0.0
        bw = self.bandwidth[source][target]
        return None if bw is None else payload_bytes / bw


class ProblemInstance(BaseModel):
    """
    Complete MUS input for one scheduling decision.

    Construction raises InvalidInstanceError when ids, hosting, links,
    covering servers or the Max_as/Max_cs bounds are inconsistent.
    """

    model_config = ConfigDict(frozen=True)

    requests: tuple[Request, ...] = ()
    servers: tuple[Server, ...]
    catalog: ModelCatalog
    delays: DelayTable
    max_accuracy: float = Field(default=1.0, gt=0.0, description="Max_as")
    max_completion: float = Field(..., gt=0.0, description="Max_cs in ms")
    mode: SchedulingMode = SchedulingMode.STRICT

    @model_validator(mode="after")
    def _check_consistency(self) -> Self:
        n_services, n_models = self.catalog.n_services, self.catalog.n_models
        all_pairs = {(k, l) for k in range(n_services) for l in range(n_models)}

        for j, server in enumerate(self.servers):
            if server.id != j:
                raise InvalidInstanceError(f"servers[{j}] has id {server.id}")
            if server.perf_class not in self.catalog.proc_delay:
                raise InvalidInstanceError(f"server {j} perf_class '{server.perf_class}' has no delays")
            if not server.hosted_set <= all_pairs:
                raise InvalidInstanceError(f"server {j} hosts pairs outside the catalog")
            if server.is_cloud and server.hosted_set != all_pairs:
                raise InvalidInstanceError(f"cloud server {j} must host every catalog pair")

        if len(self.delays.bandwidth) != len(self.servers):
            raise InvalidInstanceError("delay table size must match the number of servers")
        for j, server in enumerate(self.servers):
            if server.is_cloud:
                continue
            for jj in range(len(self.servers)):
                if not self.delays.connected(j, jj):
                    raise InvalidInstanceError(f"edge server {j} has no link to server {jj}")

        for i, request in enumerate(self.requests):
            if request.id != i:
                raise InvalidInstanceError(f"requests[{i}] has id {request.id}")
            if request.service >= n_services:
                raise InvalidInstanceError(f"request {i} asks for unknown service {request.service}")
            if request.covering_server >= len(self.servers):
                raise InvalidInstanceError(f"request {i} covered by unknown server")
            if self.servers[request.covering_server].is_cloud:
                raise InvalidInstanceError(f"request {i} must be covered by an edge server")

        if self.max_accuracy < self.catalog.max_accuracy:
            raise InvalidInstanceError("max_accuracy is below a catalog accuracy")
        worst = self.worst_completion_time()
        if self.max_completion < worst:
            raise InvalidInstanceError(
                f"max_completion {self.max_completion} is below achievable completion {worst}"
            )
        return self

    @property
    def n_requests(self) -> int:
        return len(self.requests)

    @property
    def is_strict(self) -> bool:
        return self.mode is SchedulingMode.STRICT

    @cached_property
    def options_by_service(self) -> dict[int, tuple[tuple[int, int], ...]]:
        """(server, model) pairs hosting each service, sorted by server then model."""
        options: dict[int, list[tuple[int, int]]] = defaultdict(list)
        for server in self.servers:
            for k, l in server.hosted:
                options[k].append((server.id, l))
        return {k: tuple(sorted(pairs)) for k, pairs in options.items()}

    def worst_completion_time(self) -> float:
        """Largest completion time any request can reach on any hosting server."""
        slowest: dict[tuple[int, int], float] = {}
        for server in self.servers:
            table = self.catalog.proc_delay[server.perf_class]
            for k, l in server.hosted:
                key = (server.id, k)
                slowest[key] = max(slowest.get(key, 0.0), table[k][l])

        worst = 0.0
        for request in self.requests:
            for server in self.servers:
                proc = slowest.get((server.id, request.service))
                if proc is None:
                    continue
                comm = self.delays.comm_delay(
                    request.covering_server, server.id, request.payload_bytes
                )
                if comm is None:
                    continue
                worst = max(worst, comm + request.queue_delay + proc)
        return worst
