"""
Edge Sched - Instance Generator
===============================
Draws a ProblemInstance from a ScenarioConfig. All randomness comes from
the seed, in a fixed draw order, so (config, seed) -> instance is a pure
function.
"""

import numpy as np
import structlog

from edge_sched.exceptions import InvalidConfigError
from edge_sched.model.types import (
    DelayTable,
    ModelCatalog,
    ProblemInstance,
    Request,
    Server,
    ServerKind,
)
from edge_sched.scenario.config import ScenarioConfig, ServerClassProfile, WeightMode

logger = structlog.get_logger(__name__)

SeedLike = int | np.random.SeedSequence | np.random.Generator


def _rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def _table(values: np.ndarray) -> tuple[tuple[float, ...], ...]:
    return tuple(tuple(float(x) for x in row) for row in values)


def draw_catalog(config: ScenarioConfig, rng: np.random.Generator) -> ModelCatalog:
    """
    Model accuracies and per-class processing delays.

    Within a service both rise with the model index: bigger models are
    more accurate and slower.
    """
    k, l = config.n_services, config.n_models
    if config.model_accuracy_levels is not None:
        accuracy = np.tile(np.asarray(config.model_accuracy_levels, dtype=np.float64), (k, 1))
    else:
        accuracy = np.sort(config.model_accuracy.sample(rng, k * l).reshape(k, l), axis=1)

    proc_delay: dict[str, tuple[tuple[float, ...], ...]] = {}
    for profile in (*config.edge_classes, config.cloud_class):
        delays = np.sort(profile.proc_delay.sample(rng, k * l).reshape(k, l), axis=1)
        proc_delay[profile.name] = _table(delays)

    return ModelCatalog(
        accuracy=_table(np.clip(accuracy, 0.0, 1.0)),
        proc_delay=proc_delay,
        compute_cost=tuple((config.compute_cost,) * l for _ in range(k)),
        comm_cost=tuple((config.comm_cost,) * l for _ in range(k)),
    )


def place_models(
    profile: ServerClassProfile,
    n_services: int,
    n_models: int,
    rng: np.random.Generator,
) -> tuple[tuple[int, int], ...]:
    """
    Sample the (service, model) pairs one server hosts, without replacement.

    The server gets ``placement_slots`` pairs, or every allowed pair when
    the class sets no limit.

    Raises:
        InvalidConfigError: the class asks for more pairs than exist
    """
    models = profile.hosted_models if profile.hosted_models is not None else range(n_models)
    allowed = [(k, l) for k in range(n_services) for l in sorted(set(models))]
    slots = profile.placement_slots
    if slots is not None and slots > len(allowed):
        raise InvalidConfigError(
            f"Class '{profile.name}' places {slots} pairs but only {len(allowed)} exist",
            errors=[{"loc": ["placement_slots"], "msg": f"at most {len(allowed)} pairs exist"}],
        )
    if slots is None or slots == len(allowed):
        return tuple(allowed)
    picked = rng.choice(len(allowed), size=slots, replace=False)
    return tuple(allowed[int(p)] for p in np.sort(picked))


def build_servers(config: ScenarioConfig, rng: np.random.Generator) -> tuple[Server, ...]:
    """Edge servers first (classes round-robin), then cloud servers."""
    servers: list[Server] = []
    for j in range(config.n_edge_servers):
        profile = config.edge_class_of(j)
        servers.append(
            Server(
                id=j,
                kind=ServerKind.EDGE,
                compute_capacity=profile.compute_capacity,
                comm_capacity=profile.comm_capacity,
                perf_class=profile.name,
                hosted=place_models(profile, config.n_services, config.n_models, rng),
            )
        )

    everything = tuple((k, l) for k in range(config.n_services) for l in range(config.n_models))
    cloud = config.cloud_class
    for c in range(config.n_cloud_servers):
        servers.append(
            Server(
                id=config.n_edge_servers + c,
                kind=ServerKind.CLOUD,
                compute_capacity=cloud.compute_capacity,
                comm_capacity=cloud.comm_capacity,
                perf_class=cloud.name,
                hosted=everything,
            )
        )
    return tuple(servers)


def build_delay_table(
    servers: tuple[Server, ...],
    edge_bandwidth: float,
    cloud_bandwidth: float,
) -> DelayTable:
    """Full mesh: edge links use ``edge_bandwidth``, anything touching a cloud ``cloud_bandwidth``."""
    rows: list[tuple[float | None, ...]] = []
    for a in servers:
        row: list[float | None] = []
        for b in servers:
            if a.id == b.id:
                row.append(None)
            elif a.is_cloud or b.is_cloud:
                row.append(cloud_bandwidth)
            else:
                row.append(edge_bandwidth)
        rows.append(tuple(row))
    return DelayTable(bandwidth=tuple(rows))


def draw_requests(
    config: ScenarioConfig,
    rng: np.random.Generator,
    n_requests: int | None = None,
) -> tuple[Request, ...]:
    """Thresholds, queue delays, payloads, services, covering edges and weights."""
    n = config.n_requests if n_requests is None else n_requests
    min_accuracy = np.clip(config.requested_accuracy.sample(rng, n), 0.0, 1.0)
    max_completion = np.maximum(config.requested_delay.sample(rng, n), 0.0)
    queue_delay = np.maximum(config.queue_delay.sample(rng, n), 0.0)
    payload = np.rint(np.maximum(config.payload.sample(rng, n), 0.0)).astype(np.int64)
    services = rng.integers(config.n_services, size=n)
    covering = rng.integers(config.n_edge_servers, size=n)

    weights = config.weights
    if weights.mode is WeightMode.COMPLEMENTARY:
        w_accuracy = rng.uniform(0.0, 1.0, size=n)
        w_time = 1.0 - w_accuracy
    else:
        w_accuracy = np.full(n, weights.accuracy)
        w_time = np.full(n, weights.time)

    return tuple(
        Request(
            id=i,
            service=int(services[i]),
            min_accuracy=float(min_accuracy[i]),
            max_completion=float(max_completion[i]),
            weight_accuracy=float(w_accuracy[i]),
            weight_time=float(w_time[i]),
            covering_server=int(covering[i]),
            payload_bytes=int(payload[i]),
            queue_delay=float(queue_delay[i]),
        )
        for i in range(n)
    )


def assemble_instance(
    config: ScenarioConfig,
    requests: tuple[Request, ...],
    servers: tuple[Server, ...],
    catalog: ModelCatalog,
    delays: DelayTable,
) -> ProblemInstance:
    """
    Validated instance with Max_as and Max_cs raised to cover the catalog,
    every achievable completion time and every requested delay.
    """
    provisional = ProblemInstance.model_construct(
        requests=requests,
        servers=servers,
        catalog=catalog,
        delays=delays,
        max_accuracy=config.max_accuracy,
        max_completion=config.max_completion,
        mode=config.mode,
    )
    max_completion = max(
        config.max_completion,
        provisional.worst_completion_time(),
        max((r.max_completion for r in requests), default=0.0),
    )
    return ProblemInstance(
        requests=requests,
        servers=servers,
        catalog=catalog,
        delays=delays,
        max_accuracy=max(config.max_accuracy, catalog.max_accuracy),
        max_completion=max_completion,
        mode=config.mode,
    )


def generate_instance(config: ScenarioConfig, seed: SeedLike) -> ProblemInstance:
    """
    Draw one random instance.

    Args:
        config: validated scenario configuration
        seed: integer seed, SeedSequence or an already seeded Generator

    Returns:
        ProblemInstance satisfying every model invariant
    """
    rng = _rng(seed)
    catalog = draw_catalog(config, rng)
    servers = build_servers(config, rng)
    delays = build_delay_table(servers, config.edge_bandwidth, config.cloud_bandwidth)
    requests = draw_requests(config, rng)
    return assemble_instance(config, requests, servers, catalog, delays)
