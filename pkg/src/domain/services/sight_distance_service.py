"""Stopping and overtaking sight distances, patch/feet and speed conversions."""

import math
from enum import Enum

from ..exceptions import ConfigurationError

FEET_PER_PATCH = 100.0
FEET_PER_SECOND_PER_MPH = 5280.0 / 3600.0


class Direction(str, Enum):
    """Conversion direction for patches_feet."""

    TO_FEET = "to_feet"
    TO_PATCHES = "to_patches"


def ssd(speed_mph: float, reaction_time_s: float, decel_ftps2: float) -> float:
    """
    Stopping sight distance in feet: 1.47 V t + 1.075 V^2 / a.

    Args:
        speed_mph: Design speed V in mph
        reaction_time_s: Brake reaction time t in seconds
        decel_ftps2: Deceleration rate a in ft/s^2

    Raises:
        ConfigurationError: If a <= 0 or V < 0
    """
    if decel_ftps2 <= 0:
        raise ConfigurationError(f"Deceleration must be positive, got {decel_ftps2}", ["decel_ftps2"])
    if speed_mph < 0:
        raise ConfigurationError(f"Speed must be non-negative, got {speed_mph}", ["speed_mph"])
    return 1.47 * speed_mph * reaction_time_s + 1.075 * speed_mph ** 2 / decel_ftps2


def osd(v_b: float, reaction_time_s: float, spacing_ft: float, max_accel: float) -> float:
    """
    Overtaking sight distance: V_b t + 2 s + V_b sqrt(4 s / a).

    Inputs must share consistent units; no unit conversion is applied.

    Raises:
        ConfigurationError: If a <= 0 or any input is negative
    """
    if max_accel <= 0:
        raise ConfigurationError(f"Overtaking acceleration must be positive, got {max_accel}", ["max_accel"])
    if min(v_b, reaction_time_s, spacing_ft) < 0:
        raise ConfigurationError("Overtaking inputs must be non-negative", ["v_b", "reaction_time_s", "spacing_ft"])
    return v_b * reaction_time_s + 2.0 * spacing_ft + v_b * math.sqrt(4.0 * spacing_ft / max_accel)


def patches_feet(value: float, direction: Direction) -> float:
    """Convert between patches and feet (1 patch = 100 feet)."""
    if direction is Direction.TO_FEET:
        return value * FEET_PER_PATCH
    return value / FEET_PER_PATCH


def mph_to_patches_per_second(speed_mph: float) -> float:
    return speed_mph * FEET_PER_SECOND_PER_MPH / FEET_PER_PATCH
