"""World entity: two vehicles, an optional pedestrian, tick and generator."""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..value_objects.leader_profile import ConstantProfile, LeaderProfile
from .vehicle import VehicleState


@dataclass(frozen=True)
class PedestrianEvent:
    """A stationary obstacle appearing `gap` patches ahead of the bullet at `tick`."""

    tick: int
    gap: float
    crossing_ticks: int = 200
    position: Optional[float] = None  # set when the pedestrian appears

    @property
    def visible(self) -> bool:
        return self.position is not None

    def active_at(self, tick: int) -> bool:
        return self.visible and self.tick <= tick < self.tick + self.crossing_ticks


@dataclass(frozen=True)
class WorldState:
    """
    Car-following world on a non-wrapping linear road.

    The generator is owned by the world and advanced by step_world; a world
    is stepped by exactly one thread.
    """

    bullet: VehicleState
    target: VehicleState
    rng: np.random.Generator
    leader: LeaderProfile = field(default_factory=ConstantProfile)
    tick: int = 0
    tick_seconds: float = 1.0
    pedestrian: Optional[PedestrianEvent] = None
    collided: bool = False

    @property
    def gap(self) -> float:
        """Patches from bullet to target."""
        return self.target.position - self.bullet.position

    @property
    def pedestrian_gap(self) -> Optional[float]:
        """Patches from bullet to an active pedestrian, None when none is on the road."""
        if self.pedestrian is None or not self.pedestrian.active_at(self.tick):
            return None
        assert self.pedestrian.position is not None
        return self.pedestrian.position - self.bullet.position

    @property
    def time_ms(self) -> float:
        return self.tick * self.tick_seconds * 1000.0
