"""Per-tick trace records and run summaries."""

from dataclasses import asdict, dataclass, field, fields
from typing import Any, Dict, Optional, Tuple


@dataclass(frozen=True)
class TickLog:
    """One record per tick; field order is the CSV column order."""

    tick: int
    time_ms: float
    bullet_position: float
    bullet_speed: float
    target_position: float
    target_speed: float
    gap_patches: float
    gap_ft: float
    ssd_ft: float
    ssd_patches: float
    undesirability: float
    likelihood: float
    ig: float
    potential: float
    intensity: float
    band: str
    expressed_band: str
    command: str
    leader_mode: str
    escalated_by: str = ""
    pedestrian_gap: Optional[float] = None

    @classmethod
    def columns(cls) -> Tuple[str, ...]:
        return tuple(f.name for f in fields(cls))


@dataclass(frozen=True)
class RunResult:
    """Outcome of one repetition."""

    scenario_id: str
    run_index: int
    seed: int
    ticks: int
    collision: bool
    collision_tick: Optional[int]
    min_gap: float
    max_band: str
    peak_intensity: float
    switch_count: int
    learner_activations: int
    spearman: Optional[float]
    band_histogram: Dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class RunSummary:
    """Aggregate over every repetition of a scenario."""

    scenario_id: str
    runs: int
    collisions: int
    min_gap: float
    max_band: str
    peak_intensity: float
    band_histogram: Dict[str, int]
    learner_activations: int
    spearman_mean: Optional[float]
    spearman_max: Optional[float]
    wall_time_s: float
    results: Tuple[RunResult, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["results"] = [result.to_dict() for result in self.results]
        return data


@dataclass(frozen=True)
class SweepPoint:
    """Summary of the scenario runs at one value of a swept parameter."""

    parameter: str
    value: float
    summary: RunSummary
