"""Vehicle entity for the car-following world."""

from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

from ..exceptions import ConfigurationError
from ..value_objects.motor import CommandKind, MotorCommand


class Role(str, Enum):
    """Following (controlled) or leading vehicle."""

    BULLET = "Bullet"
    TARGET = "Target"


@dataclass(frozen=True)
class VehicleState:
    """Position in patches, speed in mph, rates in mph per tick."""

    role: Role
    position: float
    speed: float
    min_speed: float
    max_speed: float
    accel_rate: float
    decel_rate: float

    def __post_init__(self) -> None:
        if self.min_speed < 0 or self.max_speed < self.min_speed:
            raise ConfigurationError(
                f"{self.role.value}: need 0 <= min_speed <= max_speed, got "
                f"({self.min_speed}, {self.max_speed})",
                ["min_speed", "max_speed"],
            )
        if self.speed < 0 or self.speed > self.max_speed:
            raise ConfigurationError(
                f"{self.role.value}: speed {self.speed} outside [0, {self.max_speed}]", ["speed"]
            )

    @property
    def stopped(self) -> bool:
        return self.speed == 0.0

    def apply(self, command: MotorCommand, max_brake_decel: Optional[float] = None) -> "VehicleState":
        """
        Next speed after a command.

        Brake stops the vehicle this tick (or drops by max_brake_decel when
        set). Accelerate and Decelerate clamp to [min_speed, max_speed]; a
        vehicle below min_speed (ramping up after a brake) is floored at 0.
        """
        speed = self.speed
        if command.kind is CommandKind.BRAKE:
            speed = 0.0 if max_brake_decel is None else max(0.0, speed - max_brake_decel)
        elif command.kind is CommandKind.ACCELERATE:
            speed = min(speed + command.rate, self.max_speed)
        elif command.kind is CommandKind.DECELERATE:
            floor = self.min_speed if speed >= self.min_speed else 0.0
            speed = max(speed - command.rate, floor)
        return replace(self, speed=speed)

    def advance(self, patches: float) -> "VehicleState":
        """Move forward by a non-negative distance."""
        return replace(self, position=self.position + max(patches, 0.0))
