"""JSON run summaries."""

import json
import math
from pathlib import Path
from typing import Any

from ...domain.entities.trace import RunSummary


def _finite(value: Any) -> Any:
    """NaN/inf are not JSON; write them as null."""
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {key: _finite(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_finite(item) for item in value]
    return value


def summary_document(summary: RunSummary) -> dict:
    return _finite(summary.to_dict())


def write_summary(summary: RunSummary, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as handle:
        json.dump(summary_document(summary), handle, indent=2, sort_keys=True, allow_nan=False)
        handle.write("\n")
    return path
