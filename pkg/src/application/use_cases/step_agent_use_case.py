"""One tick of the emotion-enabled controller: sense, appraise, learn, act."""

from dataclasses import dataclass
from typing import Protocol

import structlog

from ...domain.entities.learner import LearnerState
from ...domain.services.driving_rule_service import select_driving_rule, update_learner
from ...domain.services.sight_distance_service import FEET_PER_PATCH, mph_to_patches_per_second
from ...domain.value_objects.controller import ControllerSettings
from ...domain.value_objects.fear import AppraisalInputs, FearConfig, FearState
from ...domain.value_objects.intensity_bands import Band, IntensityBands
from ...domain.value_objects.motor import MotorCommand, SensedState
from ..services.appraisal_mapper import AppraisalMapper

logger = structlog.get_logger(__name__)


class IFearAppraiser(Protocol):
    """Protocol for the fear appraisal (FearAppraisalService in production)."""

    @property
    def bands(self) -> IntensityBands:
        """Band table used to classify intensities."""
        ...

    def appraise(self, inputs: AppraisalInputs, config: FearConfig) -> FearState:
        """Full fear appraisal for crisp inputs."""
        ...


@dataclass(frozen=True)
class AgentStep:
    """Result of one agent tick, with every intermediate value for the trace."""

    command: MotorCommand
    fear: FearState
    learner: LearnerState
    inputs: AppraisalInputs
    ssd_ft: float
    ttc_s: float


class StepAgentUseCase:
    """The agent pipeline: derive_appraisal -> appraise -> update_learner -> select_driving_rule."""

    def __init__(
        self,
        appraiser: IFearAppraiser,
        settings: ControllerSettings,
        fear_config: FearConfig,
        tick_seconds: float = 1.0,
    ):
        """
        Initialize step agent use case.

        Args:
            appraiser: Fear appraisal service
            settings: Controller limits, escalation thresholds, regimes and learner parameters
            fear_config: Weights, threshold and rulebase variant
            tick_seconds: Seconds per tick, for the one-tick reach guard
        """
        self._appraiser = appraiser
        self._settings = settings
        self._fear_config = fear_config
        self._tick_seconds = tick_seconds
        self._mapper = AppraisalMapper(settings)

    def new_learner(self) -> LearnerState:
        return LearnerState(
            window_ticks=self._settings.window_ticks,
            switch_threshold=self._settings.switch_threshold,
            hold_ticks=self._settings.hold_ticks,
        )

    def _one_tick_reach(self, sensed: SensedState) -> float:
        """Patches the bullet can cover during the next tick at its fastest allowed command."""
        top_speed = sensed.own_speed + self._settings.regimes.max_accel
        return mph_to_patches_per_second(top_speed) * self._tick_seconds

    def _escalate(self, fear: FearState, sensed: SensedState, ttc_s: float, ssd_ft: float) -> FearState:
        """Raise the appraised band for sudden events the fuzzy appraisal reacts to too slowly."""
        settings = self._settings
        bands = self._appraiser.bands
        very_high = bands.representative(Band.VERY_HIGH)
        brake_distance = settings.pedestrian_brake_distance_ft

        if sensed.pedestrian_detected and sensed.pedestrian_gap * FEET_PER_PATCH <= brake_distance:
            fear = fear.escalate(Band.VERY_HIGH, very_high, "pedestrian")
        if sensed.leader_speed == 0.0 and sensed.gap * FEET_PER_PATCH <= brake_distance:
            fear = fear.escalate(Band.VERY_HIGH, very_high, "stationary_obstacle")
        if ttc_s <= settings.critical_ttc_s:
            fear = fear.escalate(Band.VERY_HIGH, very_high, "time_to_collision")
        if sensed.nearest_gap <= self._one_tick_reach(sensed):
            fear = fear.escalate(Band.VERY_HIGH, very_high, "one_tick_reach")
        if sensed.nearest_gap * FEET_PER_PATCH < ssd_ft:
            fear = fear.escalate(Band.MEDIUM, bands.representative(Band.MEDIUM), "sight_distance")
        return fear

    def execute(self, learner: LearnerState, sensed: SensedState, tick: int) -> AgentStep:
        """
        Run the controller for one tick.

        Args:
            learner: Learner state from the previous tick
            sensed: What the sensory module reports
            tick: Current tick (strictly increasing across calls)

        Returns:
            Command, fear state and updated learner
        """
        inputs = self._mapper.derive(sensed)
        ssd_ft = self._mapper.ssd_feet(sensed.own_speed)
        ttc_s = self._mapper.time_to_collision(sensed)

        fear = self._appraiser.appraise(inputs, self._fear_config)
        fear = self._escalate(fear, sensed, ttc_s, ssd_ft)

        learner = update_learner(learner, fear.band, tick)
        command = select_driving_rule(
            fear.band, learner, self._settings.regimes, self._mapper.closing_speed(sensed)
        )

        logger.debug(
            "Agent step",
            tick=tick,
            gap=sensed.nearest_gap,
            intensity=fear.intensity,
            band=fear.band.label,
            escalated_by=fear.escalated_by or None,
            command=str(command),
            leader_mode=learner.leader_mode.value,
        )
        return AgentStep(
            command=command,
            fear=fear,
            learner=learner,
            inputs=inputs,
            ssd_ft=ssd_ft,
            ttc_s=ttc_s,
        )
