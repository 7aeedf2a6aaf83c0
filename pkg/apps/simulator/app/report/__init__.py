"""Edge Sched Simulator - CSV, config/bundle files and terminal summaries."""

from app.report.config_io import (
    SolutionBundle,
    dump_bundle,
    dump_config,
    load_bundle,
    load_config,
    parse_config,
    write_bundle,
    write_config,
)
from app.report.results_csv import (
    read_results,
    render_results,
    write_gap,
    write_results,
    write_sweep,
)

__all__ = [
    "SolutionBundle",
    "dump_bundle",
    "dump_config",
    "load_bundle",
    "load_config",
    "parse_config",
    "read_results",
    "render_results",
    "write_bundle",
    "write_config",
    "write_gap",
    "write_results",
    "write_sweep",
]
