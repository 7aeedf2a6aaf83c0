"""
Edge Sched - Optimality Gap
===========================
Objectives of heuristics next to the exact optimum on the same random
instances, and the ratio statistics reported by ``compare``.
"""

import math
from collections.abc import Sequence

import numpy as np
import structlog
from pydantic import BaseModel, ConfigDict

from edge_sched.schedulers.exact import SolverLimits
from edge_sched.schedulers.factory import get_scheduler, parse_algorithms
from edge_sched.scenario.config import ScenarioConfig
from edge_sched.scenario.generator import generate_instance
from edge_sched.simulation.monte_carlo import (
    algorithm_stream,
    check_size_guards,
    derive_seed,
    instance_seed,
)

logger = structlog.get_logger(__name__)

RATIO_TOLERANCE = 1e-9


class GapRow(BaseModel):
    """One algorithm's objective on one run next to the optimum."""

    model_config = ConfigDict(frozen=True)

    run: int
    algorithm: str
    objective: float
    optimum: float

    @property
    def ratio(self) -> float | None:
        """objective / optimum, undefined unless the optimum is positive."""
        if self.optimum <= 0:
            return None
        return self.objective / self.optimum


class GapSummary(BaseModel):
    """Ratio statistics of one algorithm over the runs with a positive optimum."""

    model_config = ConfigDict(frozen=True)

    algorithm: str
    runs: int
    mean_ratio: float
    min_ratio: float
    max_ratio: float
    optimal_share: float


def optimality_gap(
    config: ScenarioConfig,
    algorithms: Sequence[str],
    runs: int,
    base_seed: int = 0,
    drop_penalty: float = 0.0,
    limits: SolverLimits | None = None,
    random_retry: bool = True,
) -> list[GapRow]:
    """
    Solve each run exactly and evaluate ``algorithms`` on the same instance.

    Instances are the ones ``monte_carlo`` draws for the same seed.

    Returns:
        Rows ordered by run then algorithm name, the exact solver included

    Raises:
        InstanceTooLargeError: config too large for the exact solver
        SolverBudgetExceededError: a run hit the node limit
    """
    names = sorted(set(parse_algorithms(",".join(algorithms))) | {"exact"})
    check_size_guards(config, names, limits)
    exact = get_scheduler("exact", drop_penalty=drop_penalty, limits=limits)

    rows: list[GapRow] = []
    for run in range(runs):
        instance = generate_instance(config, instance_seed(base_seed, run))
        optimum = exact.schedule(instance).objective
        for name in names:
            if name == "exact":
                objective = optimum
            else:
                scheduler = get_scheduler(
                    name, drop_penalty=drop_penalty, limits=limits, random_retry=random_retry
                )
                rng = None
                if scheduler.is_randomized:
                    rng = np.random.default_rng(derive_seed(base_seed, run, algorithm_stream(name)))
                objective = scheduler.schedule(instance, rng).objective
            rows.append(GapRow(run=run, algorithm=name, objective=objective, optimum=optimum))

    logger.info("Optimality gap measured", runs=runs, algorithms=names)
    return rows


def summarize_gap(rows: Sequence[GapRow]) -> list[GapSummary]:
    """Per-algorithm ratio statistics, algorithms in first-seen order."""
    ratios: dict[str, list[float]] = {}
    for row in rows:
        ratio = row.ratio
        bucket = ratios.setdefault(row.algorithm, [])
        if ratio is not None:
            bucket.append(ratio)

    summaries: list[GapSummary] = []
    for algorithm, values in ratios.items():
        if not values:
            summaries.append(
                GapSummary(
                    algorithm=algorithm,
                    runs=0,
                    mean_ratio=math.nan,
                    min_ratio=math.nan,
                    max_ratio=math.nan,
                    optimal_share=math.nan,
                )
            )
            continue
        array = np.asarray(values)
        summaries.append(
            GapSummary(
                algorithm=algorithm,
                runs=len(values),
                mean_ratio=float(array.mean()),
                min_ratio=float(array.min()),
                max_ratio=float(array.max()),
                optimal_share=float(np.mean(array >= 1.0 - RATIO_TOLERANCE)),
            )
        )
    return summaries
