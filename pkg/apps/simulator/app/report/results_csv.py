"""
Edge Sched Simulator - CSV Tables
=================================
Tidy CSV output: per-run results, sweep points and optimality gaps.

Percentages stay fractions in [0, 1]; floats use six decimals; rows are
sorted so identical inputs give byte-identical files.
"""

import csv
import io
import math
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import TextIO

from edge_sched.simulation import GapRow, RunResult, SweepPoint

from app.core.exceptions import OutputWriteError

RESULT_COLUMNS = (
    "run",
    "algorithm",
    "n_requests",
    "satisfied_pct",
    "mean_us",
    "dropped_pct",
    "local_pct",
    "offload_cloud_pct",
    "offload_edge_pct",
)

SWEEP_COLUMNS = (
    "parameter",
    "value",
    "algorithm",
    "runs",
    "satisfied_pct",
    "satisfied_pct_se",
    "mean_us",
    "mean_us_se",
    "dropped_pct",
    "local_pct",
    "offload_cloud_pct",
    "offload_edge_pct",
)

GAP_COLUMNS = ("run", "algorithm", "objective", "ratio_to_exact")


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def _render(columns: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buffer.getvalue()


def _write_text(text: str, path: Path | str | None, stream: TextIO | None = None) -> None:
    if path is None:
        if stream is None:
            raise OutputWriteError("<stdout>", "no output stream")
        stream.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8", newline="")
    except OSError as e:
        raise OutputWriteError(str(path), e.strerror or str(e)) from e


# =============================================================================
# Run results
# =============================================================================

def render_results(results: Iterable[RunResult]) -> str:
    rows = sorted(results, key=lambda r: (r.run, r.algorithm))
    return _render(
        RESULT_COLUMNS,
        (
            (
                str(r.run),
                r.algorithm,
                str(r.n_requests),
                _fmt(r.satisfied_pct),
                _fmt(r.mean_us),
                _fmt(r.dropped_pct),
                _fmt(r.local_pct),
                _fmt(r.offload_cloud_pct),
                _fmt(r.offload_edge_pct),
            )
            for r in rows
        ),
    )


def write_results(
    results: Iterable[RunResult],
    path: Path | str | None,
    stream: TextIO | None = None,
) -> None:
    """
    Write per-run results as CSV, sorted by (run, algorithm).

    Args:
        results: rows to write
        path: destination file, or None to write to ``stream``
        stream: used when ``path`` is None

    Raises:
        OutputWriteError: the file cannot be written
    """
    _write_text(render_results(results), path, stream)


def read_results(path: Path | str) -> list[RunResult]:
    """Parse a file produced by ``write_results``."""
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.DictReader(handle)
        return [
            RunResult(
                run=int(row["run"]),
                algorithm=row["algorithm"],
                n_requests=int(row["n_requests"]),
                satisfied_pct=float(row["satisfied_pct"]),
                mean_us=float(row["mean_us"]),
                dropped_pct=float(row["dropped_pct"]),
                local_pct=float(row["local_pct"]),
                offload_cloud_pct=float(row["offload_cloud_pct"]),
                offload_edge_pct=float(row["offload_edge_pct"]),
            )
            for row in reader
        ]


# =============================================================================
# Sweeps and gaps
# =============================================================================

def render_sweep(points: Iterable[SweepPoint]) -> str:
    return _render(
        SWEEP_COLUMNS,
        (
            (
                p.parameter,
                _fmt(p.value),
                p.algorithm,
                str(p.runs),
                _fmt(p.satisfied_pct),
                _fmt(p.satisfied_pct_se),
                _fmt(p.mean_us),
                _fmt(p.mean_us_se),
                _fmt(p.dropped_pct),
                _fmt(p.local_pct),
                _fmt(p.offload_cloud_pct),
                _fmt(p.offload_edge_pct),
            )
            for p in points
        ),
    )


def write_sweep(
    points: Iterable[SweepPoint],
    path: Path | str | None,
    stream: TextIO | None = None,
) -> None:
    """Write one row per (sweep value, algorithm), in sweep order."""
    _write_text(render_sweep(points), path, stream)


def render_gap(rows: Iterable[GapRow]) -> str:
    def ratio(row: GapRow) -> str:
        value = row.ratio
        return "" if value is None or math.isnan(value) else _fmt(value)

    ordered = sorted(rows, key=lambda r: (r.run, r.algorithm))
    return _render(
        GAP_COLUMNS,
        ((str(r.run), r.algorithm, _fmt(r.objective), ratio(r)) for r in ordered),
    )


def write_gap(rows: Iterable[GapRow], path: Path | str | None, stream: TextIO | None = None) -> None:
    """Write objectives next to the optimum; the ratio is empty when the optimum is not positive."""
    _write_text(render_gap(rows), path, stream)
