"""Scenario configuration file: pydantic models, unit resolution, loading."""

import json
from pathlib import Path
from typing import Annotated, Any, List, Literal, Mapping, Optional, Tuple, Union

import structlog
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ...domain.entities.scenario import Scenario
from ...domain.entities.vehicle import Role, VehicleState
from ...domain.entities.world import PedestrianEvent
from ...domain.exceptions import ConfigurationError
from ...domain.value_objects.controller import ControllerSettings
from ...domain.value_objects.fear import FearConfig
from ...domain.value_objects.leader_profile import (
    ConstantProfile,
    LeaderProfile,
    ScriptedProfile,
    ScriptedSegment,
    SeededRandomProfile,
)
from ...domain.value_objects.motor import CommandKind, DrivingRegimes

logger = structlog.get_logger(__name__)

MAX_SEED = 2**64 - 1


class _Model(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class UnitsConfig(_Model):
    """Unit declaration: velocities in mph or normalized to [0, 1] with a scale."""

    velocity: Literal["mph", "normalized"] = "mph"
    mph_per_unit: Optional[float] = Field(default=None, gt=0)
    tick: Literal["step", "ms"] = "step"
    prototype: bool = False

    @model_validator(mode="after")
    def _scale_declared(self) -> "UnitsConfig":
        if self.velocity == "normalized" and self.mph_per_unit is None:
            raise ValueError("normalized velocities need mph_per_unit")
        return self

    @property
    def mph_scale(self) -> float:
        return self.mph_per_unit if self.velocity == "normalized" and self.mph_per_unit else 1.0


class VehicleConfig(_Model):
    min_velocity: float = Field(ge=0)
    max_velocity: float = Field(ge=0)
    initial_velocity: Optional[float] = Field(default=None, ge=0)
    acceleration: float = Field(ge=0, le=0.1)
    deceleration: float = Field(ge=0, le=0.1)

    @model_validator(mode="after")
    def _velocities_ordered(self) -> "VehicleConfig":
        if self.min_velocity > self.max_velocity:
            raise ValueError("min_velocity must not exceed max_velocity")
        initial = self.initial_velocity
        if initial is not None and not self.min_velocity <= initial <= self.max_velocity:
            raise ValueError("initial_velocity must lie in [min_velocity, max_velocity]")
        return self


class ScriptedSegmentConfig(_Model):
    start_tick: int = Field(ge=0)
    command: CommandKind


class ConstantLeaderConfig(_Model):
    kind: Literal["constant"] = "constant"


class ScriptedLeaderConfig(_Model):
    kind: Literal["scripted"]
    segments: List[ScriptedSegmentConfig] = Field(min_length=1)


class SeededRandomLeaderConfig(_Model):
    kind: Literal["seeded_random"]
    aggressiveness: float = Field(default=0.0, ge=0, le=1)
    max_brake_probability: float = Field(default=0.02, ge=0, le=1)


LeaderProfileConfig = Annotated[
    Union[ConstantLeaderConfig, ScriptedLeaderConfig, SeededRandomLeaderConfig],
    Field(discriminator="kind"),
]


class PedestrianConfig(_Model):
    tick: int = Field(ge=0)
    gap: float = Field(ge=0)
    crossing_ticks: int = Field(default=200, ge=1)


class ControllerConfig(_Model):
    """
    Controller section.

    Distances are in patches. Speed-valued fields (v_max, regime rates,
    max_brake_decel) use the declared velocity unit. high_accel defaults to
    the bullet's acceleration; high_decel and low_rate default to its
    deceleration.
    """

    d_max: float = Field(default=20.0, gt=0)
    v_max: float = Field(default=100.0, gt=0)
    ttc_max_s: float = Field(default=10.0, gt=0)
    critical_ttc_s: float = Field(default=2.0, ge=0)
    reaction_time_s: float = Field(default=0.45, gt=0)
    decel_ftps2: float = Field(default=11.2, gt=0)
    imp_goal_margin: float = Field(default=2.0, gt=0)
    sensing_confidence: float = Field(default=1.0, ge=0, le=1)
    sensing_range: Optional[float] = Field(default=None, gt=0)
    pedestrian_brake_distance_ft: float = Field(default=6.56, ge=0)
    high_accel: Optional[float] = Field(default=None, ge=0)
    high_decel: Optional[float] = Field(default=None, ge=0)
    low_rate: Optional[float] = Field(default=None, ge=0)
    window_ticks: int = Field(default=500, ge=1)
    switch_threshold: int = Field(default=3, ge=1)
    hold_ticks: int = Field(default=250, ge=0)
    max_brake_decel: Optional[float] = Field(default=None, gt=0)


class FearConfigModel(_Model):
    weights: Tuple[float, float, float] = (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)
    threshold: float = Field(default=0.0, ge=0, le=1)
    amended: bool = True

    @model_validator(mode="after")
    def _convex(self) -> "FearConfigModel":
        if any(w < 0 for w in self.weights) or abs(sum(self.weights) - 1.0) > 1e-9:
            raise ValueError("weights must be non-negative and sum to 1")
        return self


class ScenarioConfig(_Model):
    """The scenario JSON file."""

    id: str = Field(min_length=1)
    units: UnitsConfig = Field(default_factory=UnitsConfig)
    separation: float = Field(gt=0, le=20)
    tick_seconds: Optional[float] = Field(default=None, gt=0)
    ticks: int = Field(ge=0)
    seed: int = Field(default=0, ge=0, le=MAX_SEED)
    repetitions: int = Field(default=1, ge=1)
    bullet: VehicleConfig
    target: VehicleConfig
    leader: LeaderProfileConfig = Field(default_factory=ConstantLeaderConfig)
    pedestrian: Optional[PedestrianConfig] = None
    controller: ControllerConfig = Field(default_factory=ControllerConfig)
    fear: FearConfigModel = Field(default_factory=FearConfigModel)

    @model_validator(mode="after")
    def _separation_range(self) -> "ScenarioConfig":
        if not self.units.prototype and self.separation < 1:
            raise ValueError("separation must be in [1, 20] patches unless units.prototype is set")
        if self.units.velocity == "normalized":
            for vehicle in (self.bullet, self.target):
                if vehicle.max_velocity > 1:
                    raise ValueError("normalized velocities must lie in [0, 1]")
        return self

    @property
    def resolved_tick_seconds(self) -> float:
        if self.tick_seconds is not None:
            return self.tick_seconds
        return 0.001 if self.units.tick == "ms" else 1.0


def _vehicle(config: VehicleConfig, role: Role, scale: float) -> VehicleState:
    initial = config.initial_velocity if config.initial_velocity is not None else config.min_velocity
    return VehicleState(
        role=role,
        position=0.0,
        speed=initial * scale,
        min_speed=config.min_velocity * scale,
        max_speed=config.max_velocity * scale,
        accel_rate=config.acceleration * scale,
        decel_rate=config.deceleration * scale,
    )


def _leader(config: Union[ConstantLeaderConfig, ScriptedLeaderConfig, SeededRandomLeaderConfig]) -> LeaderProfile:
    if isinstance(config, ScriptedLeaderConfig):
        return ScriptedProfile(
            tuple(ScriptedSegment(segment.start_tick, segment.command) for segment in config.segments)
        )
    if isinstance(config, SeededRandomLeaderConfig):
        return SeededRandomProfile(config.aggressiveness, config.max_brake_probability)
    return ConstantProfile()


def to_scenario(config: ScenarioConfig) -> Scenario:
    """Resolve units and build the domain scenario."""
    scale = config.units.mph_scale
    bullet = _vehicle(config.bullet, Role.BULLET, scale)
    target = _vehicle(config.target, Role.TARGET, scale)
    controller = config.controller
    regimes = DrivingRegimes(
        high_accel=controller.high_accel * scale if controller.high_accel is not None else bullet.accel_rate,
        high_decel=controller.high_decel * scale if controller.high_decel is not None else bullet.decel_rate,
        low_rate=controller.low_rate * scale if controller.low_rate is not None else bullet.decel_rate,
    )
    settings = ControllerSettings(
        d_max=controller.d_max,
        v_max=controller.v_max * scale,
        ttc_max_s=controller.ttc_max_s,
        critical_ttc_s=controller.critical_ttc_s,
        reaction_time_s=controller.reaction_time_s,
        decel_ftps2=controller.decel_ftps2,
        imp_goal_margin=controller.imp_goal_margin,
        sensing_confidence=controller.sensing_confidence,
        sensing_range=controller.sensing_range,
        pedestrian_brake_distance_ft=controller.pedestrian_brake_distance_ft,
        regimes=regimes,
        window_ticks=controller.window_ticks,
        switch_threshold=controller.switch_threshold,
        hold_ticks=controller.hold_ticks,
        max_brake_decel=None if controller.max_brake_decel is None else controller.max_brake_decel * scale,
    )
    pedestrian = None
    if config.pedestrian is not None:
        pedestrian = PedestrianEvent(
            tick=config.pedestrian.tick,
            gap=config.pedestrian.gap,
            crossing_ticks=config.pedestrian.crossing_ticks,
        )
    return Scenario(
        scenario_id=config.id,
        bullet=bullet,
        target=target,
        ticks=config.ticks,
        seed=config.seed,
        separation=config.separation,
        leader=_leader(config.leader),
        tick_seconds=config.resolved_tick_seconds,
        repetitions=config.repetitions,
        pedestrian=pedestrian,
        controller=settings,
        fear=FearConfig(
            weights=config.fear.weights,
            threshold=config.fear.threshold,
            amended=config.fear.amended,
        ),
    )


def _field_path(location: Tuple[Union[int, str], ...]) -> str:
    return ".".join(str(part) for part in location) or "<root>"


def parse_scenario_config(document: Mapping[str, Any]) -> ScenarioConfig:
    """
    Validate a scenario document.

    Raises:
        ConfigurationError: Listing every offending field path
    """
    try:
        return ScenarioConfig.model_validate(document)
    except ValidationError as e:
        fields = [_field_path(error["loc"]) for error in e.errors()]
        details = "; ".join(f"{_field_path(error['loc'])}: {error['msg']}" for error in e.errors())
        raise ConfigurationError(f"Invalid scenario config: {details}", fields) from None


def load_document(path: Path) -> Mapping[str, Any]:
    """
    Read a scenario JSON file.

    Raises:
        ConfigurationError: If the file is missing or not a JSON object
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigurationError(f"Scenario config not found: {path}", ["config"])
    try:
        with path.open(encoding="utf-8") as handle:
            document = json.load(handle)
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"Invalid JSON in {path}: {e}", ["config"]) from e
    if not isinstance(document, dict):
        raise ConfigurationError(f"Scenario config {path} must be a JSON object", ["config"])
    return document


class ScenarioLoader:
    """Loads, validates and resolves scenario configs."""

    def from_document(self, document: Mapping[str, Any]) -> Scenario:
        return to_scenario(parse_scenario_config(document))

    def load(self, path: Path) -> Scenario:
        scenario = self.from_document(load_document(path))
        logger.info("Scenario config loaded", path=str(path), scenario_id=scenario.scenario_id)
        return scenario
