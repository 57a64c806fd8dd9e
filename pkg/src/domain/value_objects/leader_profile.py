"""Leader (target vehicle) driving profiles."""

from dataclasses import dataclass
from typing import Protocol, Tuple

import numpy as np

from ..exceptions import ConfigurationError
from .motor import CommandKind, MotorCommand


class LeaderProfile(Protocol):
    """Chooses the target vehicle's command for a tick."""

    def command(self, tick: int, rng: np.random.Generator, accel_rate: float, decel_rate: float) -> MotorCommand:
        """Command for this tick."""
        ...


@dataclass(frozen=True)
class ConstantProfile:
    """Leader holds its speed."""

    def command(self, tick: int, rng: np.random.Generator, accel_rate: float, decel_rate: float) -> MotorCommand:
        return MotorCommand.hold()


@dataclass(frozen=True)
class ScriptedSegment:
    """From `start_tick` on (until the next segment) apply `kind`."""

    start_tick: int
    kind: CommandKind


@dataclass(frozen=True)
class ScriptedProfile:
    """Piecewise-constant command script; Hold before the first segment."""

    segments: Tuple[ScriptedSegment, ...]

    def __post_init__(self) -> None:
        starts = [segment.start_tick for segment in self.segments]
        if starts != sorted(starts) or len(set(starts)) != len(starts):
            raise ConfigurationError("Script segments must have strictly increasing start ticks", ["segments"])

    def command(self, tick: int, rng: np.random.Generator, accel_rate: float, decel_rate: float) -> MotorCommand:
        kind = CommandKind.HOLD
        for segment in self.segments:
            if segment.start_tick > tick:
                break
            kind = segment.kind
        if kind is CommandKind.ACCELERATE:
            return MotorCommand(kind, accel_rate)
        if kind is CommandKind.DECELERATE:
            return MotorCommand(kind, decel_rate)
        return MotorCommand(kind)


@dataclass(frozen=True)
class SeededRandomProfile:
    """
    Random accelerate/decelerate choices with occasional sudden brakes.

    Per tick the leader brakes with probability aggressiveness *
    max_brake_probability, otherwise accelerates or decelerates with equal
    odds. The draws come from the world's generator, so a run is fully
    determined by its seed.
    """

    aggressiveness: float = 0.0
    max_brake_probability: float = 0.02

    def __post_init__(self) -> None:
        if not 0.0 <= self.aggressiveness <= 1.0:
            raise ConfigurationError("Aggressiveness must be in [0, 1]", ["aggressiveness"])
        if not 0.0 <= self.max_brake_probability <= 1.0:
            raise ConfigurationError("Brake probability must be in [0, 1]", ["max_brake_probability"])

    @property
    def brake_probability(self) -> float:
        return self.aggressiveness * self.max_brake_probability

    def command(self, tick: int, rng: np.random.Generator, accel_rate: float, decel_rate: float) -> MotorCommand:
        draw = float(rng.random())
        if draw < self.brake_probability:
            return MotorCommand.brake()
        remaining = (draw - self.brake_probability) / (1.0 - self.brake_probability)
        if remaining < 0.5:
            return MotorCommand(CommandKind.DECELERATE, decel_rate)
        return MotorCommand(CommandKind.ACCELERATE, accel_rate)
