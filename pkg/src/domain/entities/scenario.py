"""A fully resolved car-following scenario (units already converted to mph/patches)."""

from dataclasses import dataclass, field
from typing import Optional

from ..exceptions import ConfigurationError
from ..value_objects.controller import ControllerSettings
from ..value_objects.fear import FearConfig
from ..value_objects.leader_profile import ConstantProfile, LeaderProfile
from .vehicle import VehicleState
from .world import PedestrianEvent


@dataclass(frozen=True)
class Scenario:
    """
    Inputs of one scenario run.

    The bullet starts at position 0 and the target `separation` patches
    ahead. Repetition k is seeded with `seed + k`.
    """

    scenario_id: str
    bullet: VehicleState
    target: VehicleState
    ticks: int
    seed: int = 0
    separation: float = 5.0
    leader: LeaderProfile = field(default_factory=ConstantProfile)
    tick_seconds: float = 1.0
    repetitions: int = 1
    pedestrian: Optional[PedestrianEvent] = None
    controller: ControllerSettings = field(default_factory=ControllerSettings)
    fear: FearConfig = field(default_factory=FearConfig)

    def __post_init__(self) -> None:
        problems = []
        if self.ticks < 0:
            problems.append("ticks")
        if self.seed < 0:
            problems.append("seed")
        if self.separation < 0:
            problems.append("separation")
        if self.tick_seconds <= 0:
            problems.append("tick_seconds")
        if self.repetitions < 1:
            problems.append("repetitions")
        if problems:
            raise ConfigurationError(f"Scenario {self.scenario_id!r} is invalid", problems)

    def seed_for(self, run_index: int) -> int:
        return self.seed + run_index
