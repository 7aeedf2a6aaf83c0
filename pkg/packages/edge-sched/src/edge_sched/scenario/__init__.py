"""
Edge Sched - Scenario Package
=============================
Scenario configs, presets and the random instance generator.
"""

from edge_sched.scenario.config import (
    CONFIG_VERSION,
    PRESETS,
    ScenarioConfig,
    ServerClassProfile,
    WeightMode,
    WeightSpec,
    get_preset,
    paper_default,
    small_profile,
    testbed_profile,
)
from edge_sched.scenario.distributions import DistributionKind, DistributionSpec
from edge_sched.scenario.generator import (
    assemble_instance,
    build_delay_table,
    build_servers,
    draw_catalog,
    draw_requests,
    generate_instance,
    place_models,
)

__all__ = [
    # Types
    "DistributionKind",
    "DistributionSpec",
    "ScenarioConfig",
    "ServerClassProfile",
    "WeightMode",
    "WeightSpec",
    # Presets
    "CONFIG_VERSION",
    "PRESETS",
    "get_preset",
    "paper_default",
    "small_profile",
    "testbed_profile",
    # Generation
    "assemble_instance",
    "build_delay_table",
    "build_servers",
    "draw_catalog",
    "draw_requests",
    "generate_instance",
    "place_models",
]
