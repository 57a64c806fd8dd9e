"""Triangular membership function value object."""

from dataclasses import dataclass

import numpy as np

from ..exceptions import InvalidMembershipError


@dataclass(frozen=True)
class TriangularMf:
    """Immutable triangle (left foot d, peak e, right foot f) in domain units."""

    d: float
    e: float
    f: float

    def __post_init__(self) -> None:
        """Validate d <= e <= f."""
        if not (self.d <= self.e <= self.f):
            raise InvalidMembershipError(
                f"Triangle feet must satisfy d <= e <= f, got ({self.d}, {self.e}, {self.f})"
            )
        if self.d == self.f:
            raise InvalidMembershipError(
                f"Triangle must have non-zero support, got ({self.d}, {self.e}, {self.f})"
            )

    def degree(self, x: float) -> float:
        """
        Membership degree of a crisp value.

        Piecewise-linear: 0 outside [d, f], rising on [d, e], falling on [e, f].

        Args:
            x: Crisp value in the variable's domain units

        Returns:
            Degree in [0, 1]
        """
        if x == self.e:
            return 1.0
        if x <= self.d or x >= self.f:
            return 0.0
        if x < self.e:
            return (x - self.d) / (self.e - self.d)
        return (self.f - x) / (self.f - self.e)

    def curve(self, grid: np.ndarray) -> np.ndarray:
        """Vectorised membership over a sample grid."""
        if self.e == self.d:
            rising = np.where(grid >= self.d, 1.0, 0.0)
        else:
            rising = (grid - self.d) / (self.e - self.d)
        if self.f == self.e:
            falling = np.where(grid <= self.f, 1.0, 0.0)
        else:
            falling = (self.f - grid) / (self.f - self.e)
        values = np.minimum(rising, falling)
        values = np.clip(values, 0.0, 1.0)
        values[grid == self.e] = 1.0
        return values
