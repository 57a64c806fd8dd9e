"""Traffic-pattern learner state (driving rule iv)."""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from ..exceptions import ConfigurationError
from ..value_objects.intensity_bands import Band


class LeaderMode(str, Enum):
    """What the learner believes about the leading driver."""

    NORMAL = "Normal"
    AGGRESSIVE = "Aggressive"


@dataclass(frozen=True)
class LearnerState:
    """Band history inside the window plus the latched leader mode."""

    window_ticks: int = 500
    switch_threshold: int = 3
    hold_ticks: int = 250
    band_history: Tuple[Tuple[int, Band], ...] = ()
    leader_mode: LeaderMode = LeaderMode.NORMAL
    hold_until_tick: int = -1
    activations: int = 0

    def __post_init__(self) -> None:
        if self.window_ticks < 1:
            raise ConfigurationError("Learner window must be at least one tick", ["window_ticks"])
        if self.switch_threshold < 1:
            raise ConfigurationError("Switch threshold must be at least 1", ["switch_threshold"])
        if self.hold_ticks < 0:
            raise ConfigurationError("Hold duration must be non-negative", ["hold_ticks"])

    @property
    def aggressive(self) -> bool:
        return self.leader_mode is LeaderMode.AGGRESSIVE

    @property
    def last_tick(self) -> int:
        return self.band_history[-1][0] if self.band_history else -1
