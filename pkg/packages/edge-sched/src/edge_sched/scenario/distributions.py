"""
Edge Sched - Distribution Specs
===============================
Declarative random-variable descriptions used by scenario configs.

Three kinds are supported:

- normal_truncated: N(mean, std) restricted to [lo, hi]
- uniform: U[lo, hi]
- constant: always ``value``
"""

from enum import Enum
from typing import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import stats


class DistributionKind(str, Enum):
    """Supported distribution families."""
    NORMAL_TRUNCATED = "normal_truncated"
    UNIFORM = "uniform"
    CONSTANT = "constant"


class DistributionSpec(BaseModel):
    """A scalar distribution with its unit annotation."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: DistributionKind
    mean: float | None = None
    std: float | None = Field(default=None, ge=0.0)
    lo: float | None = None
    hi: float | None = None
    value: float | None = None
    unit: str = ""

    @model_validator(mode="after")
    def _check_params(self) -> Self:
        match self.kind:
            case DistributionKind.NORMAL_TRUNCATED:
                if None in (self.mean, self.std, self.lo, self.hi):
                    raise ValueError("normal_truncated needs mean, std, lo and hi")
            case DistributionKind.UNIFORM:
                if None in (self.lo, self.hi):
                    raise ValueError("uniform needs lo and hi")
            case DistributionKind.CONSTANT:
                if self.value is None:
                    raise ValueError("constant needs value")
        if self.lo is not None and self.hi is not None and self.lo > self.hi:
            raise ValueError(f"lo ({self.lo}) must not exceed hi ({self.hi})")
        return self

    # =========================================================================
    # Constructors
    # =========================================================================

    @classmethod
    def normal(cls, mean: float, std: float, lo: float, hi: float, unit: str = "") -> Self:
        return cls(kind=DistributionKind.NORMAL_TRUNCATED, mean=mean, std=std, lo=lo, hi=hi, unit=unit)

    @classmethod
    def uniform(cls, lo: float, hi: float, unit: str = "") -> Self:
        return cls(kind=DistributionKind.UNIFORM, lo=lo, hi=hi, unit=unit)

    @classmethod
    def constant(cls, value: float, unit: str = "") -> Self:
        return cls(kind=DistributionKind.CONSTANT, value=value, unit=unit)

    # =========================================================================
    # Properties
    # =========================================================================

    @property
    def upper(self) -> float:
        """Largest value a draw can take."""
        if self.kind is DistributionKind.CONSTANT:
            return float(self.value)  # type: ignore[arg-type]
        return float(self.hi)  # type: ignore[arg-type]

    @property
    def lower(self) -> float:
        """Smallest value a draw can take."""
        if self.kind is DistributionKind.CONSTANT:
            return float(self.value)  # type: ignore[arg-type]
        return float(self.lo)  # type: ignore[arg-type]

    @property
    def is_degenerate(self) -> bool:
        """True when every draw is the same number."""
        if self.kind is DistributionKind.CONSTANT:
            return True
        if self.lo == self.hi:
            return True
        return self.kind is DistributionKind.NORMAL_TRUNCATED and self.std == 0.0

    def with_mean(self, mean: float) -> Self:
        """Same family centred on ``mean`` (a constant becomes ``mean``)."""
        if self.kind is DistributionKind.NORMAL_TRUNCATED:
            return self.model_copy(update={"mean": mean})
        if self.kind is DistributionKind.CONSTANT:
            return self.model_copy(update={"value": mean})
        half = (self.upper - self.lower) / 2.0
        return self.model_copy(update={"lo": mean - half, "hi": mean + half})

    # =========================================================================
    # Sampling
    # =========================================================================

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """
        Draw ``size`` values.

        Args:
            rng: numpy random generator owning the stream
            size: number of draws

        Returns:
            float64 array of shape (size,)
        """
        if size == 0:
            return np.empty(0, dtype=np.float64)

        if self.kind is DistributionKind.CONSTANT:
            return np.full(size, float(self.value))  # type: ignore[arg-type]

        lo, hi = float(self.lo), float(self.hi)  # type: ignore[arg-type]
        if self.kind is DistributionKind.UNIFORM:
            return rng.uniform(lo, hi, size=size) if lo < hi else np.full(size, lo)

        mean, std = float(self.mean), float(self.std)  # type: ignore[arg-type]
        if std == 0.0 or lo == hi:
            return np.full(size, min(max(mean, lo), hi))
        a, b = (lo - mean) / std, (hi - mean) / std
        draws = stats.truncnorm.rvs(a, b, loc=mean, scale=std, size=size, random_state=rng)
        return np.clip(np.asarray(draws, dtype=np.float64), lo, hi)

    def expected_value(self) -> float:
        """Mean of the distribution as declared (after truncation)."""
        if self.kind is DistributionKind.CONSTANT:
            return float(self.value)  # type: ignore[arg-type]
        lo, hi = float(self.lo), float(self.hi)  # type: ignore[arg-type]
        if self.kind is DistributionKind.UNIFORM:
            return (lo + hi) / 2.0
        mean, std = float(self.mean), float(self.std)  # type: ignore[arg-type]
        if std == 0.0 or lo == hi:
            return min(max(mean, lo), hi)
        a, b = (lo - mean) / std, (hi - mean) / std
        return float(stats.truncnorm.mean(a, b, loc=mean, scale=std))
