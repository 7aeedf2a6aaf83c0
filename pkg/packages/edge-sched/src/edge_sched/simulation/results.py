"""
Edge Sched - Result Types
=========================
Per-run metrics, sweep specifications and aggregation with standard errors.

All percentages are fractions in [0, 1].
"""

import math
from collections import defaultdict
from collections.abc import Iterable, Sequence
from enum import Enum
from typing import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy import stats

from edge_sched.schedulers.base import Decision, Schedule


class RunResult(BaseModel):
    """Metrics of one algorithm on one run (or one frame)."""

    model_config = ConfigDict(frozen=True)

    run: int
    algorithm: str
    n_requests: int = Field(..., ge=0)
    satisfied_pct: float
    mean_us: float
    dropped_pct: float
    local_pct: float
    offload_cloud_pct: float
    offload_edge_pct: float
    seed: int | None = None

    @classmethod
    def from_counts(
        cls,
        run: int,
        algorithm: str,
        n_requests: int,
        satisfied: int,
        local: int,
        offload_cloud: int,
        offload_edge: int,
        dropped: int,
        objective: float,
        seed: int | None = None,
    ) -> Self:
        n = max(n_requests, 1)
        return cls(
            run=run,
            algorithm=algorithm,
            n_requests=n_requests,
            satisfied_pct=satisfied / n,
            mean_us=objective,
            dropped_pct=dropped / n,
            local_pct=local / n,
            offload_cloud_pct=offload_cloud / n,
            offload_edge_pct=offload_edge / n,
            seed=seed,
        )

    @classmethod
    def from_schedule(cls, run: int, schedule: Schedule, seed: int | None = None) -> Self:
        """Metrics of ``schedule``; ``mean_us`` is its objective."""
        return cls.from_counts(
            run=run,
            algorithm=schedule.algorithm,
            n_requests=len(schedule.assignments),
            satisfied=schedule.satisfied_count,
            local=schedule.count(Decision.LOCAL),
            offload_cloud=schedule.count(Decision.OFFLOAD_CLOUD),
            offload_edge=schedule.count(Decision.OFFLOAD_EDGE),
            dropped=schedule.dropped_count,
            objective=schedule.objective,
            seed=seed,
        )


class SweepParameter(str, Enum):
    """Scenario parameters a sweep can vary."""
    REQUESTED_DELAY_MEAN = "requested_delay_mean"
    REQUESTED_ACCURACY_MEAN = "requested_accuracy_mean"
    N_REQUESTS = "n_requests"
    QUEUE_DELAY_MAX = "queue_delay_max"
    ACCURACY_WEIGHT = "accuracy_weight"


class SweepSpec(BaseModel):
    """One experiment axis: a parameter, its values and the algorithms compared."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    parameter: SweepParameter
    values: tuple[float, ...] = Field(..., min_length=1)
    runs_per_point: int = Field(default=1000, ge=1)
    algorithms: tuple[str, ...] = ("gus",)

    @field_validator("values")
    @classmethod
    def _strictly_monotone(cls, values: tuple[float, ...]) -> tuple[float, ...]:
        steps = [b - a for a, b in zip(values, values[1:])]
        if steps and not (all(s > 0 for s in steps) or all(s < 0 for s in steps)):
            raise ValueError("sweep values must be strictly monotone")
        return values


class SweepPoint(BaseModel):
    """Aggregated metrics of one algorithm at one sweep value."""

    model_config = ConfigDict(frozen=True)

    parameter: str
    value: float
    algorithm: str
    runs: int
    satisfied_pct: float
    satisfied_pct_se: float
    mean_us: float
    mean_us_se: float
    dropped_pct: float
    local_pct: float
    offload_cloud_pct: float
    offload_edge_pct: float


def standard_error(values: Sequence[float]) -> float:
    """Standard error of the mean; 0 for fewer than two samples."""
    if len(values) < 2:
        return 0.0
    se = float(stats.sem(np.asarray(values, dtype=np.float64)))
    return 0.0 if math.isnan(se) else se


def aggregate(
    results: Iterable[RunResult],
    parameter: str = "",
    value: float = math.nan,
) -> list[SweepPoint]:
    """
    Mean and standard error per algorithm, in first-seen algorithm order.

    The aggregate satisfied_pct is the plain mean of the per-run values.
    """
    by_algorithm: dict[str, list[RunResult]] = defaultdict(list)
    for result in results:
        by_algorithm[result.algorithm].append(result)

    points: list[SweepPoint] = []
    for algorithm, rows in by_algorithm.items():
        satisfied = np.array([r.satisfied_pct for r in rows])
        mean_us = np.array([r.mean_us for r in rows])
        points.append(
            SweepPoint(
                parameter=parameter,
                value=value,
                algorithm=algorithm,
                runs=len(rows),
                satisfied_pct=float(satisfied.mean()),
                satisfied_pct_se=standard_error(satisfied),
                mean_us=float(mean_us.mean()),
                mean_us_se=standard_error(mean_us),
                dropped_pct=float(np.mean([r.dropped_pct for r in rows])),
                local_pct=float(np.mean([r.local_pct for r in rows])),
                offload_cloud_pct=float(np.mean([r.offload_cloud_pct for r in rows])),
                offload_edge_pct=float(np.mean([r.offload_edge_pct for r in rows])),
            )
        )
    return points
