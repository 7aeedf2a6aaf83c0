"""
Edge Sched - Monte-Carlo Harness
================================
Runs schedulers over many random instances and sweeps scenario parameters.

Run r draws its instance from SeedSequence(base_seed, spawn_key=(r, 0))
and gives each randomized scheduler its own stream keyed by the
algorithm, so results do not depend on worker count or algorithm order.
"""

import os
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor

import numpy as np
import structlog

from edge_sched.exceptions import (
    InstanceTooLargeError,
    InvalidConfigError,
    UnknownSweepParameterError,
)
from edge_sched.schedulers.exact import SolverLimits
from edge_sched.schedulers.factory import ALGORITHMS, get_scheduler, parse_algorithms
from edge_sched.scenario.config import ScenarioConfig, WeightMode, WeightSpec
from edge_sched.scenario.distributions import DistributionSpec
from edge_sched.scenario.generator import generate_instance
from edge_sched.simulation.results import (
    RunResult,
    SweepParameter,
    SweepPoint,
    SweepSpec,
    aggregate,
)

logger = structlog.get_logger(__name__)


def derive_seed(base_seed: int, run: int, stream: int = 0) -> np.random.SeedSequence:
    """Independent seed for (run, stream); stream 0 draws the instance."""
    return np.random.SeedSequence(base_seed, spawn_key=(run, stream))


def instance_seed(base_seed: int, run: int) -> int:
    """
    Integer seed of the instance drawn for ``run``; what result rows record,
    so ``generate_instance(config, row.seed)`` rebuilds that run's instance.
    """
    return int(derive_seed(base_seed, run).generate_state(1)[0])


def algorithm_stream(name: str) -> int:
    return 1 + ALGORITHMS.index(name)


def resolve_workers(workers: int) -> int:
    """0 means one worker per CPU."""
    if workers <= 0:
        return os.cpu_count() or 1
    return workers


def check_size_guards(
    config: ScenarioConfig,
    algorithms: Sequence[str],
    limits: SolverLimits | None = None,
) -> None:
    """
    Refuse configs whose instances the exact solvers would reject.

    Raises:
        InstanceTooLargeError: exact or brute-force cannot handle the config
    """
    limits = limits or SolverLimits()
    n_servers = config.n_edge_servers + config.n_cloud_servers
    if "exact" in algorithms:
        size = config.n_requests * n_servers * config.n_models
        if size > limits.max_variables:
            raise InstanceTooLargeError("exact", size, limits.max_variables)
    if "brute-force" in algorithms:
        size = (n_servers * config.n_models + 1) ** config.n_requests
        if size > limits.max_vectors:
            raise InstanceTooLargeError("brute-force", size, limits.max_vectors)


def evaluate_run(
    config: ScenarioConfig,
    algorithms: Sequence[str],
    run: int,
    base_seed: int,
    drop_penalty: float = 0.0,
    limits: SolverLimits | None = None,
    random_retry: bool = True,
) -> list[RunResult]:
    """Every algorithm on the instance of run ``run``, sorted by algorithm name."""
    seed = instance_seed(base_seed, run)
    instance = generate_instance(config, seed)
    results: list[RunResult] = []
    for name in sorted(algorithms):
        scheduler = get_scheduler(
            name, drop_penalty=drop_penalty, limits=limits, random_retry=random_retry
        )
        rng = None
        if scheduler.is_randomized:
            rng = np.random.default_rng(derive_seed(base_seed, run, algorithm_stream(name)))
        schedule = scheduler.schedule(instance, rng)
        results.append(RunResult.from_schedule(run, schedule, seed=seed))
    return results


def _evaluate_chunk(
    config: ScenarioConfig,
    algorithms: tuple[str, ...],
    runs: range,
    base_seed: int,
    drop_penalty: float,
    limits: SolverLimits | None,
    random_retry: bool,
) -> list[RunResult]:
    results: list[RunResult] = []
    for run in runs:
        results.extend(
            evaluate_run(config, algorithms, run, base_seed, drop_penalty, limits, random_retry)
        )
    return results


def monte_carlo(
    config: ScenarioConfig,
    algorithms: Sequence[str],
    runs: int,
    base_seed: int = 0,
    workers: int = 1,
    drop_penalty: float = 0.0,
    limits: SolverLimits | None = None,
    random_retry: bool = True,
) -> list[RunResult]:
    """
    Evaluate ``algorithms`` on ``runs`` random instances of ``config``.

    Args:
        config: scenario to sample from
        algorithms: scheduler names, see ``list_available_schedulers``
        runs: number of instances (>= 1)
        base_seed: root of every random stream
        workers: process count, 0 for one per CPU
        drop_penalty: objective cost per dropped request
        limits: exact / brute-force guards
        random_retry: Random-Assignment tries further servers after a miss

    Returns:
        One RunResult per (run, algorithm), ordered by run then algorithm name
    """
    if runs < 1:
        raise InvalidConfigError(
            "runs must be at least 1", errors=[{"loc": ["runs"], "msg": "must be >= 1"}]
        )
    names = tuple(parse_algorithms(",".join(algorithms)))
    check_size_guards(config, names, limits)

    workers = min(resolve_workers(workers), runs)
    if workers == 1:
        results = _evaluate_chunk(
            config, names, range(runs), base_seed, drop_penalty, limits, random_retry
        )
    else:
        chunks = [range(start, runs, workers) for start in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(
                    _evaluate_chunk,
                    config, names, chunk, base_seed, drop_penalty, limits, random_retry,
                )
                for chunk in chunks
            ]
            results = [r for future in futures for r in future.result()]
        results.sort(key=lambda r: (r.run, r.algorithm))

    logger.info(
        "Monte-Carlo batch completed",
        scenario=config.name,
        runs=runs,
        algorithms=list(names),
        workers=workers,
    )
    return results


# =============================================================================
# Sweeps
# =============================================================================

def parse_sweep_parameter(name: str) -> SweepParameter:
    """
    Sweep parameter by name.

    Raises:
        UnknownSweepParameterError: not a sweepable parameter
    """
    try:
        return SweepParameter(name)
    except ValueError:
        raise UnknownSweepParameterError(name, [p.value for p in SweepParameter]) from None


def apply_parameter(config: ScenarioConfig, parameter: SweepParameter, value: float) -> ScenarioConfig:
    """
    ``config`` with one sweep parameter set to ``value``.

    Raises:
        InvalidConfigError: the value does not give a valid config
    """
    match parameter:
        case SweepParameter.REQUESTED_DELAY_MEAN:
            return config.with_overrides(requested_delay=config.requested_delay.with_mean(value))
        case SweepParameter.REQUESTED_ACCURACY_MEAN:
            return config.with_overrides(
                requested_accuracy=config.requested_accuracy.with_mean(value)
            )
        case SweepParameter.N_REQUESTS:
            if value != int(value):
                raise InvalidConfigError(
                    f"n_requests must be an integer, got {value}",
                    errors=[{"loc": ["n_requests"], "msg": "must be an integer"}],
                )
            return config.with_overrides(n_requests=int(value))
        case SweepParameter.QUEUE_DELAY_MAX:
            spec = (
                DistributionSpec.uniform(0.0, value, unit="ms")
                if value > 0
                else DistributionSpec.constant(0.0, unit="ms")
            )
            return config.with_overrides(queue_delay=spec)
        case SweepParameter.ACCURACY_WEIGHT:
            return config.with_overrides(
                weights=WeightSpec(mode=WeightMode.FIXED, accuracy=value, time=1.0 - value)
            )
    raise InvalidConfigError(f"Unhandled sweep parameter {parameter}")


def sweep(
    spec: SweepSpec,
    base_config: ScenarioConfig,
    base_seed: int = 0,
    workers: int = 1,
    drop_penalty: float = 0.0,
    limits: SolverLimits | None = None,
    random_retry: bool = True,
) -> list[SweepPoint]:
    """
    Monte-Carlo at every sweep value, aggregated per algorithm.

    Every point reuses ``base_seed``, so neighbouring points see the same
    random streams and differ only by the swept parameter.
    """
    points: list[SweepPoint] = []
    for value in spec.values:
        config = apply_parameter(base_config, spec.parameter, value)
        results = monte_carlo(
            config,
            spec.algorithms,
            spec.runs_per_point,
            base_seed,
            workers=workers,
            drop_penalty=drop_penalty,
            limits=limits,
            random_retry=random_retry,
        )
        points.extend(aggregate(results, spec.parameter.value, value))
        logger.debug("Sweep point completed", parameter=spec.parameter.value, value=value)
    return points
