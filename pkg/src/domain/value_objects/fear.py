"""Appraisal inputs, fear configuration and fear state value objects."""

from dataclasses import dataclass, replace
from typing import Tuple

from ..exceptions import ConfigurationError
from .intensity_bands import Band


def clamp01(value: float) -> float:
    """Clamp a crisp value into [0, 1]."""
    return min(max(value, 0.0), 1.0)


@dataclass(frozen=True)
class AppraisalInputs:
    """The six crisp appraisal inputs, all clamped to [0, 1] on construction."""

    imp_goal: float
    ach_goal: float
    distance_norm: float
    speed_norm: float
    sense_of_reality: float
    proximity: float

    def __post_init__(self) -> None:
        for name in (
            "imp_goal",
            "ach_goal",
            "distance_norm",
            "speed_norm",
            "sense_of_reality",
            "proximity",
        ):
            object.__setattr__(self, name, clamp01(float(getattr(self, name))))


@dataclass(frozen=True)
class FearConfig:
    """Weights of the fear-potential mean and the fear threshold."""

    weights: Tuple[float, float, float] = (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)
    threshold: float = 0.0
    amended: bool = True

    def __post_init__(self) -> None:
        """Validate convex weights and a threshold inside [0, 1]."""
        if len(self.weights) != 3:
            raise ConfigurationError("Fear weights must be (w_u, w_l, w_i)", ["weights"])
        if any(w < 0 for w in self.weights):
            raise ConfigurationError(f"Fear weights must be non-negative, got {self.weights}", ["weights"])
        if abs(sum(self.weights) - 1.0) > 1e-9:
            raise ConfigurationError(f"Fear weights must sum to 1, got {sum(self.weights)}", ["weights"])
        if not 0.0 <= self.threshold <= 1.0:
            raise ConfigurationError(f"Fear threshold must be in [0, 1], got {self.threshold}", ["threshold"])


@dataclass(frozen=True)
class FearState:
    """Every intermediate value of one fear appraisal."""

    undesirability: float
    likelihood: float
    ig: float
    potential: float
    threshold: float
    intensity: float
    band: Band
    undesirability_band: Band = Band.VERY_LOW
    likelihood_band: Band = Band.VERY_LOW
    ig_band: Band = Band.VERY_LOW
    escalated_by: str = ""

    def escalate(self, band: Band, intensity: float, reason: str) -> "FearState":
        """
        Raise fear to at least `band`.

        Intensity is lifted to `intensity` (the band's representative value)
        so the recorded band keeps matching the recorded intensity.
        """
        if self.band >= band:
            return self
        return replace(self, intensity=max(self.intensity, intensity), band=band, escalated_by=reason)

    @property
    def display_intensity(self) -> float:
        """Intensity on the 0-100 scale used in printed traces."""
        return round(self.intensity * 100.0, 2)
