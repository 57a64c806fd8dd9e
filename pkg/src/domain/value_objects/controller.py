"""Controller limits, escalation thresholds and learner parameters."""

from dataclasses import dataclass, field
from typing import Optional

from ..exceptions import ConfigurationError
from .motor import DrivingRegimes


@dataclass(frozen=True)
class ControllerSettings:
    """
    Everything the agent needs besides the fear configuration.

    Distances are in patches unless the name says feet; speeds in mph.
    """

    d_max: float = 20.0
    v_max: float = 100.0
    ttc_max_s: float = 10.0
    critical_ttc_s: float = 2.0
    reaction_time_s: float = 0.45
    decel_ftps2: float = 11.2
    imp_goal_margin: float = 2.0
    sensing_confidence: float = 1.0
    sensing_range: Optional[float] = None
    pedestrian_brake_distance_ft: float = 6.56
    regimes: DrivingRegimes = field(default_factory=DrivingRegimes)
    window_ticks: int = 500
    switch_threshold: int = 3
    hold_ticks: int = 250
    max_brake_decel: Optional[float] = None

    def __post_init__(self) -> None:
        positive = {
            "d_max": self.d_max,
            "v_max": self.v_max,
            "ttc_max_s": self.ttc_max_s,
            "reaction_time_s": self.reaction_time_s,
            "decel_ftps2": self.decel_ftps2,
            "imp_goal_margin": self.imp_goal_margin,
        }
        bad = [name for name, value in positive.items() if value <= 0]
        if bad:
            raise ConfigurationError("Controller limits must be positive", bad)
        if not 0.0 <= self.sensing_confidence <= 1.0:
            raise ConfigurationError("Sensing confidence must be in [0, 1]", ["sensing_confidence"])
        if self.critical_ttc_s < 0 or self.pedestrian_brake_distance_ft < 0:
            raise ConfigurationError(
                "Escalation thresholds must be non-negative",
                ["critical_ttc_s", "pedestrian_brake_distance_ft"],
            )
        if self.sensing_range is not None and self.sensing_range <= 0:
            raise ConfigurationError("Sensing range must be positive", ["sensing_range"])
        if self.max_brake_decel is not None and self.max_brake_decel <= 0:
            raise ConfigurationError("Maximum brake deceleration must be positive", ["max_brake_decel"])
