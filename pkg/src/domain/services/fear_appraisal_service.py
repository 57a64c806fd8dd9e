"""Prospect-based fear: three fuzzy appraisals, potential, threshold gating, bands."""

from typing import Dict, Union

from ..exceptions import ConfigurationError
from ..repositories.rulebase_repository import IRulebaseRepository
from ..value_objects.fear import AppraisalInputs, FearConfig, FearState, clamp01
from ..value_objects.fuzzy_rule import FisSpec
from ..value_objects.intensity_bands import DEFAULT_BANDS, Band, IntensityBands
from .fuzzy_inference_service import DEFAULT_STEP, MamdaniEngine, engine_for

# Proximity tokens sit on the peaks of the canonical five-term partition.
PROXIMITY_TOKENS: Dict[str, float] = {
    "About to": 1.0,
    "Going to": 0.75,
    "MChance": 0.5,
    "LChance": 0.25,
    "NChance": 0.0,
}


def proximity_value(proximity: Union[float, str]) -> float:
    """Crisp proximity from a number or one of the five tokens."""
    if isinstance(proximity, str):
        try:
            return PROXIMITY_TOKENS[proximity]
        except KeyError:
            raise ConfigurationError(
                f"Unknown proximity token {proximity!r}; expected one of {', '.join(PROXIMITY_TOKENS)}",
                ["proximity"],
            ) from None
    return clamp01(float(proximity))


def fear_potential(undesirability: float, likelihood: float, ig: float, config: FearConfig) -> float:
    """Convex weighted mean of the three appraisals."""
    w_u, w_l, w_i = config.weights
    return clamp01(w_u * undesirability + w_l * likelihood + w_i * ig)


def fear_intensity(potential: float, threshold: float) -> float:
    """Excess of potential over threshold; 0 when the threshold is not exceeded."""
    if potential > threshold:
        return potential - threshold
    return 0.0


def classify_band(value: float, bands: IntensityBands = DEFAULT_BANDS) -> Band:
    """Band of a crisp intensity."""
    return bands.classify(value)


class FearAppraisalService:
    """Evaluates the undesirability, likelihood and Ig rulebases and composes fear."""

    def __init__(
        self,
        undesirability_fis: FisSpec,
        likelihood_fis: FisSpec,
        ig_fis: FisSpec,
        bands: IntensityBands = DEFAULT_BANDS,
        step: float = DEFAULT_STEP,
    ):
        """
        Initialize fear appraisal service.

        Args:
            undesirability_fis: (imp_goal, ach_goal) -> undesirability
            likelihood_fis: (distance, speed) -> likelihood
            ig_fis: (sense_of_reality, proximity) -> ig
            bands: Band table for intensities and per-appraisal levels
            step: Defuzzification grid step
        """
        self._undesirability: MamdaniEngine = engine_for(undesirability_fis, step)
        self._likelihood: MamdaniEngine = engine_for(likelihood_fis, step)
        self._ig: MamdaniEngine = engine_for(ig_fis, step)
        self._bands = bands

    @classmethod
    def from_repository(
        cls, repository: IRulebaseRepository, amended: bool = True, step: float = DEFAULT_STEP
    ) -> "FearAppraisalService":
        """Build the service from the three named rulebases and the band table."""
        return cls(
            undesirability_fis=repository.get("undesirability", amended=amended),
            likelihood_fis=repository.get("likelihood"),
            ig_fis=repository.get("ig"),
            bands=repository.get_bands(),
            step=step,
        )

    @property
    def bands(self) -> IntensityBands:
        return self._bands

    def undesirability(self, imp_goal: float, ach_goal: float) -> float:
        return self._undesirability.evaluate({"imp_goal": imp_goal, "ach_goal": ach_goal})

    def likelihood(self, distance_norm: float, speed_norm: float) -> float:
        return self._likelihood.evaluate({"distance": distance_norm, "speed": speed_norm})

    def global_intensity(self, sense_of_reality: float, proximity: Union[float, str]) -> float:
        return self._ig.evaluate(
            {"sense_of_reality": sense_of_reality, "proximity": proximity_value(proximity)}
        )

    def classify_band(self, value: float) -> Band:
        return self._bands.classify(value)

    def appraise(self, inputs: AppraisalInputs, config: FearConfig) -> FearState:
        """
        Full fear appraisal for one set of crisp inputs.

        undesirability -> likelihood -> Ig -> potential -> intensity -> band.
        """
        undesirability = self.undesirability(inputs.imp_goal, inputs.ach_goal)
        likelihood = self.likelihood(inputs.distance_norm, inputs.speed_norm)
        ig = self.global_intensity(inputs.sense_of_reality, inputs.proximity)
        potential = fear_potential(undesirability, likelihood, ig, config)
        intensity = fear_intensity(potential, config.threshold)
        return FearState(
            undesirability=undesirability,
            likelihood=likelihood,
            ig=ig,
            potential=potential,
            threshold=config.threshold,
            intensity=intensity,
            band=self._bands.classify(intensity),
            undesirability_band=self._bands.classify(undesirability),
            likelihood_band=self._bands.classify(likelihood),
            ig_band=self._bands.classify(ig),
        )
