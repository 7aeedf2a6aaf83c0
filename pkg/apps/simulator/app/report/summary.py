"""
Edge Sched Simulator - Human-Readable Summaries
===============================================
Plain-text tables for the terminal. Fractions are shown as percentages.
"""

import math
from collections.abc import Sequence

from edge_sched.schedulers import ConstraintViolation, Schedule
from edge_sched.simulation import GapSummary, RunResult, SweepPoint, aggregate


def pct(value: float) -> str:
    """0.4567 -> '45.67%'."""
    if math.isnan(value):
        return "n/a"
    return f"{value * 100:.2f}%"


def _table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(cell.ljust(w) for cell, w in zip(row, widths)) for row in rows)
    return "\n".join(lines) + "\n"


def format_results(results: Sequence[RunResult]) -> str:
    """Mean metrics per algorithm over all runs."""
    rows = [
        (
            p.algorithm,
            str(p.runs),
            pct(p.satisfied_pct),
            f"{p.mean_us:.4f}",
            pct(p.dropped_pct),
            pct(p.local_pct),
            pct(p.offload_cloud_pct),
            pct(p.offload_edge_pct),
        )
        for p in sorted(aggregate(results), key=lambda p: p.algorithm)
    ]
    return _table(
        ("algorithm", "runs", "satisfied", "mean US", "dropped", "local", "cloud", "edge"), rows
    )


def format_sweep(points: Sequence[SweepPoint]) -> str:
    rows = [
        (
            f"{p.value:g}",
            p.algorithm,
            f"{pct(p.satisfied_pct)} ± {pct(p.satisfied_pct_se)}",
            f"{p.mean_us:.4f} ± {p.mean_us_se:.4f}",
        )
        for p in points
    ]
    parameter = points[0].parameter if points else "value"
    return _table((parameter, "algorithm", "satisfied", "mean US"), rows)


def format_schedule(schedule: Schedule) -> str:
    """One line per request, then the objective."""
    rows = [
        (
            str(a.request),
            a.decision.value,
            "-" if a.server is None else str(a.server),
            "-" if a.model is None else str(a.model),
            "-" if a.accuracy is None else f"{a.accuracy:.4f}",
            "-" if a.completion is None else f"{a.completion:.1f}",
            f"{a.us:.6f}",
        )
        for a in schedule.assignments
    ]
    body = _table(("request", "decision", "server", "model", "accuracy", "completion_ms", "us"), rows)
    n = len(schedule.assignments)
    satisfied = schedule.satisfied_count / n if n else 0.0
    return (
        body
        + f"algorithm: {schedule.algorithm}\n"
        + f"objective: {schedule.objective:.6f}\n"
        + f"satisfied: {schedule.satisfied_count}/{n} ({pct(satisfied)})\n"
    )


def format_gap(summaries: Sequence[GapSummary]) -> str:
    """Ratio to the optimum per algorithm; GUS first."""
    ordered = sorted(summaries, key=lambda s: (s.algorithm != "gus", s.algorithm))
    rows = [
        (
            s.algorithm,
            str(s.runs),
            f"{s.mean_ratio:.4f}",
            f"{s.min_ratio:.4f}",
            pct(s.optimal_share),
        )
        for s in ordered
        if s.algorithm != "exact"
    ]
    lines = _table(("algorithm", "runs", "mean ratio", "min ratio", "optimal"), rows)
    gus = next((s for s in summaries if s.algorithm == "gus"), None)
    if gus is not None:
        lines += f"mean(US_gus / US_exact) = {gus.mean_ratio:.6f}\n"
    return lines


def format_violations(violations: Sequence[ConstraintViolation]) -> str:
    return "".join(f"({v.constraint}) {v.message}\n" for v in violations)
