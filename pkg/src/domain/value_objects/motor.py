"""Motor command, driving regime and sensed state value objects."""

from dataclasses import dataclass
from enum import Enum

from ..exceptions import ConfigurationError


class CommandKind(str, Enum):
    """Actuator commands emitted by the motor module."""

    ACCELERATE = "Accelerate"
    DECELERATE = "Decelerate"
    BRAKE = "Brake"
    HOLD = "Hold"


@dataclass(frozen=True)
class MotorCommand:
    """Command plus rate (speed units per tick; 0 for Brake and Hold)."""

    kind: CommandKind
    rate: float = 0.0

    def __post_init__(self) -> None:
        if self.rate < 0:
            raise ConfigurationError(f"Command rate must be non-negative, got {self.rate}", ["rate"])
        if self.kind in (CommandKind.BRAKE, CommandKind.HOLD) and self.rate != 0.0:
            object.__setattr__(self, "rate", 0.0)

    @classmethod
    def brake(cls) -> "MotorCommand":
        return cls(CommandKind.BRAKE)

    @classmethod
    def hold(cls) -> "MotorCommand":
        return cls(CommandKind.HOLD)

    def __str__(self) -> str:
        if self.kind in (CommandKind.BRAKE, CommandKind.HOLD):
            return self.kind.value
        return f"{self.kind.value}({self.rate:g})"

    def urgency(self) -> float:
        """
        Total order from most permissive to most restrictive.

        Accelerate(high) < Accelerate(low) < Hold < Decelerate(low)
        < Decelerate(high) < Brake.
        """
        if self.kind is CommandKind.ACCELERATE:
            return -self.rate
        if self.kind is CommandKind.HOLD:
            return 0.0
        if self.kind is CommandKind.DECELERATE:
            return self.rate
        return float("inf")


@dataclass(frozen=True)
class DrivingRegime:
    """Acceleration and deceleration rates of one driving rule."""

    accel_rate: float
    decel_rate: float

    def __post_init__(self) -> None:
        if self.accel_rate < 0 or self.decel_rate < 0:
            raise ConfigurationError(
                f"Regime rates must be non-negative, got ({self.accel_rate}, {self.decel_rate})",
                ["accel_rate", "decel_rate"],
            )


@dataclass(frozen=True)
class DrivingRegimes:
    """Rule i (high accel, low decel) and rule ii (low accel, high decel)."""

    high_accel: float = 0.05
    high_decel: float = 0.05
    low_rate: float = 0.03

    def __post_init__(self) -> None:
        if min(self.high_accel, self.high_decel, self.low_rate) < 0:
            raise ConfigurationError("Regime rates must be non-negative", ["high_accel", "high_decel", "low_rate"])

    @property
    def rule_i(self) -> DrivingRegime:
        return DrivingRegime(accel_rate=self.high_accel, decel_rate=self.low_rate)

    @property
    def rule_ii(self) -> DrivingRegime:
        return DrivingRegime(accel_rate=self.low_rate, decel_rate=self.high_decel)

    @property
    def max_accel(self) -> float:
        return max(self.high_accel, self.low_rate)


@dataclass(frozen=True)
class SensedState:
    """What the sensory module reports for one tick."""

    gap: float  # patches to the leader
    own_speed: float  # mph
    closing_speed: float = 0.0  # mph, positive when the gap shrinks
    pedestrian_detected: bool = False
    pedestrian_gap: float = float("inf")  # patches

    def __post_init__(self) -> None:
        if self.gap < 0:
            raise ConfigurationError(f"Sensed gap must be non-negative, got {self.gap}", ["gap"])

    @property
    def nearest_gap(self) -> float:
        """Gap to the nearest sensed obstacle (leader or pedestrian)."""
        if self.pedestrian_detected:
            return min(self.gap, self.pedestrian_gap)
        return self.gap

    @property
    def leader_speed(self) -> float:
        return max(self.own_speed - self.closing_speed, 0.0)

    @property
    def pedestrian_nearest(self) -> bool:
        return self.pedestrian_detected and self.pedestrian_gap < self.gap
