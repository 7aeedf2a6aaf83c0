"""
Edge Sched - Scenario Configuration
===================================
Everything generate_instance needs to draw a random ProblemInstance, plus
the built-in presets:

- paper_default: the numerical evaluation (|N|=100, |M|=10, |K|=100, |L|=10)
- testbed: two edge servers and one cloud with unit capacities
- small: tight instances small enough for the exact solvers
"""

from enum import Enum
from typing import Any, Literal, Self

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from edge_sched.exceptions import InvalidConfigError
from edge_sched.model.types import SchedulingMode
from edge_sched.scenario.distributions import DistributionSpec

CONFIG_VERSION = 1


class WeightMode(str, Enum):
    """How w_ai / w_ci are assigned to requests."""
    FIXED = "fixed"
    COMPLEMENTARY = "complementary"


class WeightSpec(BaseModel):
    """
    Satisfaction weights.

    ``fixed`` gives every request (accuracy, time); ``complementary``
    draws w_ai ~ U[0, 1] per request and sets w_ci = 1 - w_ai.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    mode: WeightMode = WeightMode.FIXED
    accuracy: float = Field(default=1.0, ge=0.0, le=1.0)
    time: float = Field(default=1.0, ge=0.0, le=1.0)


class ServerClassProfile(BaseModel):
    """Hardware class shared by a group of servers."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = Field(..., min_length=1)
    proc_delay: DistributionSpec
    compute_capacity: int = Field(..., ge=0)
    comm_capacity: int = Field(..., ge=0)
    placement_slots: int | None = Field(
        default=None, ge=0, description="Max hosted (k, l) pairs; None hosts everything allowed"
    )
    hosted_models: tuple[int, ...] | None = Field(
        default=None, description="Model indices this class may host; None allows all"
    )


class ScenarioConfig(BaseModel):
    """Parameters of a randomly generated MUS scenario."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    version: Literal[1] = CONFIG_VERSION
    name: str = "custom"

    # =========================================================================
    # Topology and catalog
    # =========================================================================
    n_requests: int = Field(default=100, ge=1)
    n_edge_servers: int = Field(default=9, ge=1)
    n_cloud_servers: int = Field(default=1, ge=0)
    n_services: int = Field(default=100, ge=1)
    n_models: int = Field(default=10, ge=1)
    edge_classes: tuple[ServerClassProfile, ...]
    cloud_class: ServerClassProfile
    model_accuracy: DistributionSpec = DistributionSpec.uniform(0.3, 0.95)
    model_accuracy_levels: tuple[float, ...] | None = None
    compute_cost: int = Field(default=1, ge=0)
    comm_cost: int = Field(default=1, ge=0)

    # =========================================================================
    # Requests
    # =========================================================================
    requested_accuracy: DistributionSpec = DistributionSpec.normal(0.45, 0.10, 0.0, 1.0)
    requested_delay: DistributionSpec = DistributionSpec.normal(2000.0, 400.0, 0.0, 12000.0, unit="ms")
    queue_delay: DistributionSpec = DistributionSpec.uniform(0.0, 50.0, unit="ms")
    payload: DistributionSpec = DistributionSpec.constant(180000.0, unit="bytes")
    weights: WeightSpec = WeightSpec()

    # =========================================================================
    # Normalisation, network and mode
    # =========================================================================
    max_accuracy: float = Field(default=1.0, gt=0.0)
    max_completion: float = Field(default=12000.0, gt=0.0)
    edge_bandwidth: float = Field(default=600.0, gt=0.0, description="bytes/ms between edges")
    cloud_bandwidth: float = Field(default=600.0, gt=0.0, description="bytes/ms edge to cloud")
    mode: SchedulingMode = SchedulingMode.STRICT

    @model_validator(mode="after")
    def _check_consistency(self) -> Self:
        if not self.edge_classes:
            raise ValueError("edge_classes must name at least one class")
        names = [c.name for c in self.edge_classes] + [self.cloud_class.name]
        if len(set(names)) != len(names):
            raise ValueError("server class names must be unique")

        for profile in (*self.edge_classes, self.cloud_class):
            for l in profile.hosted_models or ():
                if not 0 <= l < self.n_models:
                    raise ValueError(
                        f"class '{profile.name}' hosts model {l} but n_models is {self.n_models}"
                    )
            models = profile.hosted_models if profile.hosted_models is not None else range(self.n_models)
            allowed = self.n_services * len(set(models))
            if profile.placement_slots is not None and profile.placement_slots > allowed:
                raise ValueError(
                    f"class '{profile.name}' places {profile.placement_slots} pairs "
                    f"but only {allowed} exist"
                )
            if profile.proc_delay.lower < 0:
                raise ValueError(f"class '{profile.name}' allows negative processing delays")

        all_pairs = self.n_services * self.n_models
        cloud = self.cloud_class
        if cloud.placement_slots is not None and cloud.placement_slots != all_pairs:
            raise ValueError(f"cloud class must host all {all_pairs} pairs")
        if cloud.hosted_models is not None and len(set(cloud.hosted_models)) != self.n_models:
            raise ValueError("cloud class must host every model")

        if self.model_accuracy_levels is not None:
            if len(self.model_accuracy_levels) != self.n_models:
                raise ValueError("model_accuracy_levels needs one entry per model")
            if any(not 0.0 <= a <= 1.0 for a in self.model_accuracy_levels):
                raise ValueError("model_accuracy_levels must be fractions in [0, 1]")
        if self.model_accuracy.lower < 0 or self.model_accuracy.upper > 1:
            raise ValueError("model_accuracy must stay within [0, 1]")
        if self.requested_accuracy.lower < 0 or self.requested_accuracy.upper > 1:
            raise ValueError("requested_accuracy must stay within [0, 1]")
        for field in ("requested_delay", "queue_delay", "payload"):
            if getattr(self, field).lower < 0:
                raise ValueError(f"{field} must be non-negative")
        return self

    def edge_class_of(self, edge_index: int) -> ServerClassProfile:
        """Edge classes are assigned round-robin by index."""
        return self.edge_classes[edge_index % len(self.edge_classes)]

    def with_overrides(self, **updates: Any) -> Self:
        """
        Copy with ``updates`` applied and every validator re-run.

        Raises:
            InvalidConfigError: the result is not a valid config
        """
        data = self.model_dump()
        data.update(updates)
        try:
            return type(self).model_validate(data)
        except ValidationError as e:
            raise InvalidConfigError(
                "Invalid scenario override",
                errors=[{"loc": list(err["loc"]), "msg": err["msg"]} for err in e.errors()],
            ) from e


# =============================================================================
# Presets
# =============================================================================

def _edge_classes() -> tuple[ServerClassProfile, ...]:
    return (
        ServerClassProfile(
            name="small",
            proc_delay=DistributionSpec.uniform(1150.0, 1300.0, unit="ms"),
            compute_capacity=3,
            comm_capacity=10,
            placement_slots=10,
        ),
        ServerClassProfile(
            name="medium",
            proc_delay=DistributionSpec.uniform(1050.0, 1200.0, unit="ms"),
            compute_capacity=5,
            comm_capacity=15,
            placement_slots=20,
        ),
        ServerClassProfile(
            name="large",
            proc_delay=DistributionSpec.uniform(950.0, 1100.0, unit="ms"),
            compute_capacity=8,
            comm_capacity=20,
            placement_slots=40,
        ),
    )


def paper_default() -> ScenarioConfig:
    """Numerical evaluation setup: 100 requests over 9 edge servers and a cloud."""
    return ScenarioConfig(
        name="paper_default",
        n_requests=100,
        n_edge_servers=9,
        n_cloud_servers=1,
        n_services=100,
        n_models=10,
        edge_classes=_edge_classes(),
        cloud_class=ServerClassProfile(
            name="cloud",
            proc_delay=DistributionSpec.constant(300.0, unit="ms"),
            compute_capacity=60,
            comm_capacity=100,
        ),
    )


def testbed_profile() -> ScenarioConfig:
    """
    Two edge servers and one cloud. Edges run only the small model
    (accuracy 0.575, 950-1300 ms) with three processing slots and ten
    sends per frame; the cloud runs the large model (0.698, 300 ms).
    """
    return ScenarioConfig(
        name="testbed",
        n_requests=40,
        n_edge_servers=2,
        n_cloud_servers=1,
        n_services=1,
        n_models=2,
        edge_classes=(
            ServerClassProfile(
                name="edge",
                proc_delay=DistributionSpec.uniform(950.0, 1300.0, unit="ms"),
                compute_capacity=3,
                comm_capacity=10,
                hosted_models=(0,),
            ),
        ),
        cloud_class=ServerClassProfile(
            name="cloud",
            proc_delay=DistributionSpec.constant(300.0, unit="ms"),
            compute_capacity=1000,
            comm_capacity=1000,
        ),
        model_accuracy_levels=(0.575, 0.698),
        requested_accuracy=DistributionSpec.constant(0.5),
        requested_delay=DistributionSpec.constant(53000.0, unit="ms"),
        queue_delay=DistributionSpec.uniform(0.0, 3000.0, unit="ms"),
        max_completion=53000.0,
    )


def small_profile() -> ScenarioConfig:
    """Six requests, two edges and a cloud with tight capacities."""
    return ScenarioConfig(
        name="small",
        n_requests=6,
        n_edge_servers=2,
        n_cloud_servers=1,
        n_services=2,
        n_models=2,
        edge_classes=(
            ServerClassProfile(
                name="edge",
                proc_delay=DistributionSpec.uniform(950.0, 1300.0, unit="ms"),
                compute_capacity=2,
                comm_capacity=2,
                placement_slots=2,
            ),
        ),
        cloud_class=ServerClassProfile(
            name="cloud",
            proc_delay=DistributionSpec.constant(300.0, unit="ms"),
            compute_capacity=2,
            comm_capacity=0,
        ),
    )


PRESETS = {
    "paper_default": paper_default,
    "testbed": testbed_profile,
    "small": small_profile,
}


def get_preset(name: str) -> ScenarioConfig:
    """
    Built-in config by name.

    Raises:
        InvalidConfigError: no preset with that name
    """
    try:
        return PRESETS[name]()
    except KeyError:
        raise InvalidConfigError(
            f"Unknown preset '{name}'. Available: {', '.join(PRESETS)}",
            errors=[{"loc": ["preset"], "msg": f"unknown preset '{name}'"}],
        ) from None
