"""Rulebase repository interface."""

from abc import ABC, abstractmethod
from typing import Tuple

from ..value_objects.fuzzy_rule import FisSpec
from ..value_objects.intensity_bands import IntensityBands


class IRulebaseRepository(ABC):
    """Abstract interface for loading named fuzzy rulebases and the band table."""

    @abstractmethod
    def get(self, name: str, amended: bool = True) -> FisSpec:
        """Get rulebase by name ('undesirability', 'likelihood', 'ig')."""
        pass

    @abstractmethod
    def get_bands(self) -> IntensityBands:
        """Get the intensity band table."""
        pass

    @abstractmethod
    def names(self) -> Tuple[str, ...]:
        """Names of the available rulebases."""
        pass
