"""Sensory module: reads the world from the bullet's point of view."""

from typing import Optional

from ...domain.entities.world import WorldState
from ...domain.value_objects.motor import SensedState


class Sensor:
    """Produces a SensedState for the bullet; pedestrians beyond `sensing_range` stay unseen."""

    def __init__(self, sensing_range: Optional[float] = None):
        self._sensing_range = sensing_range

    def sense(self, world: WorldState) -> SensedState:
        pedestrian_gap = world.pedestrian_gap
        detected = pedestrian_gap is not None and (
            self._sensing_range is None or pedestrian_gap <= self._sensing_range
        )
        return SensedState(
            gap=max(world.gap, 0.0),
            own_speed=world.bullet.speed,
            closing_speed=world.bullet.speed - world.target.speed,
            pedestrian_detected=detected,
            pedestrian_gap=max(pedestrian_gap, 0.0) if detected and pedestrian_gap is not None else float("inf"),
        )
