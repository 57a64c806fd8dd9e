"""Sensed state to crisp appraisal inputs."""

import math

from ...domain.services.sight_distance_service import (
    FEET_PER_PATCH,
    FEET_PER_SECOND_PER_MPH,
    ssd,
)
from ...domain.value_objects.controller import ControllerSettings
from ...domain.value_objects.fear import AppraisalInputs, clamp01
from ...domain.value_objects.motor import SensedState


class AppraisalMapper:
    """
    Turns a SensedState into the six appraisal inputs.

    Every input is a clamped ratio against the stopping sight distance or
    the time to collision with the nearest obstacle.
    """

    def __init__(self, settings: ControllerSettings):
        self._settings = settings

    @property
    def settings(self) -> ControllerSettings:
        return self._settings

    def closing_speed(self, sensed: SensedState) -> float:
        """mph towards the nearest obstacle; a pedestrian stands still."""
        if sensed.pedestrian_nearest:
            return sensed.own_speed
        return sensed.closing_speed

    def ssd_feet(self, speed_mph: float) -> float:
        return ssd(speed_mph, self._settings.reaction_time_s, self._settings.decel_ftps2)

    def time_to_collision(self, sensed: SensedState) -> float:
        """Seconds until contact at the current closing speed; inf when not closing."""
        closing = self.closing_speed(sensed)
        if closing <= 0:
            return math.inf
        return sensed.nearest_gap * FEET_PER_PATCH / (closing * FEET_PER_SECOND_PER_MPH)

    def derive(self, sensed: SensedState) -> AppraisalInputs:
        """
        distance_norm = gap / d_max, speed_norm = speed / v_max,
        imp_goal = 1 - gap / (SSD * margin), ach_goal = gap / SSD,
        proximity = 1 - TTC / ttc_max; all clamped to [0, 1].
        """
        settings = self._settings
        gap = sensed.nearest_gap
        gap_ft = gap * FEET_PER_PATCH
        required_ft = self.ssd_feet(sensed.own_speed)

        if required_ft > 0:
            imp_goal = clamp01(1.0 - gap_ft / (required_ft * settings.imp_goal_margin))
            ach_goal = clamp01(gap_ft / required_ft)
        else:
            imp_goal, ach_goal = 0.0, 1.0

        return AppraisalInputs(
            imp_goal=imp_goal,
            ach_goal=ach_goal,
            distance_norm=gap / settings.d_max,
            speed_norm=sensed.own_speed / settings.v_max,
            sense_of_reality=settings.sensing_confidence,
            proximity=clamp01(1.0 - self.time_to_collision(sensed) / settings.ttc_max_s),
        )


def derive_appraisal(sensed: SensedState, settings: ControllerSettings) -> AppraisalInputs:
    """Functional shorthand for AppraisalMapper(settings).derive(sensed)."""
    return AppraisalMapper(settings).derive(sensed)
