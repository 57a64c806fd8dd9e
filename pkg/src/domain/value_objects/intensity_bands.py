"""Five-level intensity bands shared by fear, undesirability, likelihood and Ig."""

from dataclasses import dataclass
from enum import IntEnum
from typing import Tuple

from ..exceptions import ConfigurationError


class Band(IntEnum):
    """Ordered intensity levels."""

    VERY_LOW = 0
    LOW = 1
    MEDIUM = 2
    HIGH = 3
    VERY_HIGH = 4

    @property
    def label(self) -> str:
        """Label as written in traces and reports."""
        return _LABELS[self]

    @classmethod
    def from_label(cls, label: str) -> "Band":
        """Parse a trace label back into a band."""
        for band, text in _LABELS.items():
            if text == label:
                return band
        raise ValueError(f"Unknown band label: {label}")

    def is_braking(self) -> bool:
        """High and VeryHigh select the brake rule."""
        return self >= Band.HIGH


_LABELS = {
    Band.VERY_LOW: "VeryLow",
    Band.LOW: "Low",
    Band.MEDIUM: "Medium",
    Band.HIGH: "High",
    Band.VERY_HIGH: "VeryHigh",
}


@dataclass(frozen=True)
class IntensityBands:
    """
    Disjoint resolution of the overlapping five-level ranges.

    Bands are [0, c0], (c0, c1], (c1, c2], (c2, c3], (c3, 1] for cut points
    c0 < c1 < c2 < c3.
    """

    cuts: Tuple[float, float, float, float] = (0.24, 0.5, 0.73, 0.9)

    def __post_init__(self) -> None:
        """Validate strictly increasing cut points inside (0, 1)."""
        if len(self.cuts) != 4:
            raise ConfigurationError("Band table needs exactly four cut points", ["cuts"])
        bounds = (0.0, *self.cuts, 1.0)
        if any(b <= a for a, b in zip(bounds, bounds[1:])):
            raise ConfigurationError(
                f"Band cut points must strictly increase inside (0, 1), got {self.cuts}",
                ["cuts"],
            )

    def classify(self, value: float) -> Band:
        """Map a crisp value (clamped to [0, 1]) to its band."""
        value = min(max(value, 0.0), 1.0)
        for index, cut in enumerate(self.cuts):
            if value <= cut:
                return Band(index)
        return Band.VERY_HIGH

    def interval(self, band: Band) -> Tuple[float, float]:
        """Closed-over-upper interval (lower, upper] of a band."""
        bounds = (0.0, *self.cuts, 1.0)
        return bounds[band], bounds[band + 1]

    def representative(self, band: Band) -> float:
        """Midpoint of a band; used when an event escalates fear to a band."""
        lower, upper = self.interval(band)
        return (lower + upper) / 2.0


DEFAULT_BANDS = IntensityBands()
