"""CSV traces: one row per tick, header in TickLog field order."""

import csv
from dataclasses import astuple
from pathlib import Path
from typing import Any, Iterable, List, Sequence

import structlog

from ...domain.entities.trace import SweepPoint, TickLog

logger = structlog.get_logger(__name__)

SWEEP_COLUMNS = (
    "parameter",
    "value",
    "scenario_id",
    "runs",
    "collisions",
    "min_gap",
    "max_band",
    "peak_intensity",
    "learner_activations",
    "spearman_mean",
)


def format_cell(value: Any) -> str:
    """Fixed formatting so identical runs give byte-identical files."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def _write(path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, quoting=csv.QUOTE_MINIMAL)
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_cell(value) for value in row])


def write_trace(logs: Sequence[TickLog], path: Path) -> Path:
    """Write a tick trace; an empty trace still gets its header row."""
    path = Path(path)
    _write(path, TickLog.columns(), (astuple(log) for log in logs))
    logger.debug("Trace written", path=str(path), rows=len(logs))
    return path


def read_trace_rows(path: Path) -> List[dict]:
    """Rows of a trace file as dictionaries of strings."""
    with Path(path).open(encoding="utf-8", newline="") as handle:
        return list(csv.DictReader(handle))


def write_sweep(points: Sequence[SweepPoint], path: Path) -> Path:
    """Combined sweep table, one row per swept value."""
    path = Path(path)
    rows = (
        (
            point.parameter,
            float(point.value),
            point.summary.scenario_id,
            point.summary.runs,
            point.summary.collisions,
            point.summary.min_gap,
            point.summary.max_band,
            point.summary.peak_intensity,
            point.summary.learner_activations,
            point.summary.spearman_mean,
        )
        for point in points
    )
    _write(path, SWEEP_COLUMNS, rows)
    logger.debug("Sweep table written", path=str(path), rows=len(points))
    return path
