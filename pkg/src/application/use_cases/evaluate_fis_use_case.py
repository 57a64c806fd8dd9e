"""Evaluate one named rulebase for crisp inputs."""

from dataclasses import dataclass
from typing import Dict, Sequence, Union

import structlog

from ...domain.exceptions import ConfigurationError, RulebaseError
from ...domain.repositories.rulebase_repository import IRulebaseRepository
from ...domain.services.fear_appraisal_service import proximity_value
from ...domain.services.fuzzy_inference_service import DEFAULT_STEP, engine_for
from ...domain.value_objects.intensity_bands import Band

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class FisEvaluation:
    """Crisp output of a rulebase and the band it falls in."""

    name: str
    inputs: Dict[str, float]
    value: float
    band: Band


class EvaluateFisUseCase:
    """Use case for evaluating undesirability, likelihood or Ig directly."""

    def __init__(self, rulebase_repository: IRulebaseRepository, step: float = DEFAULT_STEP):
        self._rulebase_repository = rulebase_repository
        self._step = step

    def _parse(self, variable: str, raw: Union[float, str]) -> float:
        if not isinstance(raw, str):
            return float(raw)
        try:
            return float(raw)
        except ValueError:
            if variable == "proximity":
                return proximity_value(raw)
            raise ConfigurationError(f"Input {variable} must be a number, got {raw!r}", [variable]) from None

    def execute(self, name: str, values: Sequence[Union[float, str]], amended: bool = True) -> FisEvaluation:
        """
        Evaluate a rulebase with positional inputs.

        Args:
            name: undesirability, likelihood or ig
            values: One crisp value per input variable, in rulebase order; the
                proximity input of ig also takes a token such as "About to"
            amended: Use the amended undesirability table

        Raises:
            RulebaseNotFoundError: If the rulebase is unknown
            RulebaseError: If the number of values does not match the inputs
        """
        fis = self._rulebase_repository.get(name, amended=amended)
        if len(values) != len(fis.input_names):
            raise RulebaseError(
                f"{name} takes {len(fis.input_names)} inputs ({', '.join(fis.input_names)}), got {len(values)}"
            )
        inputs = {variable: self._parse(variable, raw) for variable, raw in zip(fis.input_names, values)}
        value = engine_for(fis, self._step).evaluate(inputs)
        band = self._rulebase_repository.get_bands().classify(value)
        logger.debug("Rulebase evaluated", rulebase=name, inputs=inputs, value=value, band=band.label)
        return FisEvaluation(name=name, inputs=inputs, value=value, band=band)
