"""
Edge Sched - Bandwidth Estimator
================================
Expected link bandwidth for the next frame: the mean of the two most
recent values, where the fresh observation is B_t and the previous
estimate is B_{t-1}.

    E[B_{t+1}] = (B_t + B_{t-1}) / 2
"""

import math
from typing import Self

from pydantic import BaseModel, ConfigDict, Field

from edge_sched.exceptions import InvalidObservationError


class BandwidthEstimator(BaseModel):
    """Estimate for one link, in bytes/ms."""

    model_config = ConfigDict(frozen=True)

    current: float = Field(..., gt=0.0)
    previous: float = Field(..., gt=0.0)

    @classmethod
    def initial(cls, bandwidth: float) -> Self:
        return cls(current=bandwidth, previous=bandwidth)


def update_bandwidth(estimator: BandwidthEstimator, observed: float) -> BandwidthEstimator:
    """
    Fold one observation into the estimate.

    Raises:
        InvalidObservationError: ``observed`` is not a positive finite number
    """
    if not math.isfinite(observed) or observed <= 0:
        raise InvalidObservationError(observed)
    return BandwidthEstimator(current=(observed + estimator.current) / 2.0, previous=observed)
