"""
Edge Sched - Model Package
==========================
Domain types and the pure accuracy/delay satisfaction model.
"""

from edge_sched.model.capacity import CapacityState
from edge_sched.model.satisfaction import (
    completion_time,
    is_candidate,
    meets_thresholds,
    user_satisfaction,
)
from edge_sched.model.types import (
    DelayTable,
    ModelCatalog,
    ProblemInstance,
    Request,
    SchedulingMode,
    Server,
    ServerKind,
)

__all__ = [
    # Types
    "CapacityState",
    "DelayTable",
    "ModelCatalog",
    "ProblemInstance",
    "Request",
    "SchedulingMode",
    "Server",
    "ServerKind",
    # Functions
    "completion_time",
    "is_candidate",
    "meets_thresholds",
    "user_satisfaction",
]
