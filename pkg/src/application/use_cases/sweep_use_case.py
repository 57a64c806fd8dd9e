"""Parameter sweep: one scenario run per value of a numeric config field."""

import copy
from typing import Any, Dict, List, Mapping, Optional, Protocol, Sequence

import structlog

from ...domain.entities.scenario import Scenario
from ...domain.entities.trace import SweepPoint
from ...domain.exceptions import ConfigurationError
from .run_scenario_use_case import RunScenarioUseCase

logger = structlog.get_logger(__name__)


class IScenarioLoader(Protocol):
    """Protocol for turning a raw scenario document into a validated Scenario."""

    def from_document(self, document: Mapping[str, Any]) -> Scenario:
        """Validate and resolve units."""
        ...


def set_parameter(document: Mapping[str, Any], parameter: str, value: float) -> Dict[str, Any]:
    """
    Copy of `document` with a dotted numeric field replaced.

    Raises:
        ConfigurationError: If the path does not exist or is not numeric
    """
    updated = copy.deepcopy(dict(document))
    *parents, leaf = parameter.split(".")
    node: Any = updated
    for key in parents:
        if not isinstance(node, dict) or not isinstance(node.get(key), dict):
            raise ConfigurationError(f"Unknown sweep parameter {parameter!r}", [parameter])
        node = node[key]
    current = node.get(leaf) if isinstance(node, dict) else None
    if isinstance(current, bool) or not isinstance(current, (int, float)):
        raise ConfigurationError(f"Sweep parameter {parameter!r} must name a numeric field", [parameter])
    node[leaf] = value
    return updated


class SweepUseCase:
    """Use case for sweeping one parameter of a base scenario."""

    def __init__(self, run_scenario: RunScenarioUseCase, loader: IScenarioLoader):
        """
        Initialize sweep use case.

        Args:
            run_scenario: Scenario runner
            loader: Validates each modified document
        """
        self._run_scenario = run_scenario
        self._loader = loader

    def execute(
        self,
        document: Mapping[str, Any],
        parameter: str,
        values: Sequence[float],
        repetitions: Optional[int] = None,
    ) -> List[SweepPoint]:
        """
        Run the base scenario once per value.

        Every document is validated before anything runs, so a bad value
        fails the sweep without partial results.
        """
        if not values:
            raise ConfigurationError("Sweep needs at least one value", ["values"])
        scenarios = []
        for value in values:
            variant = set_parameter(document, parameter, value)
            variant["id"] = f"{document.get('id', 'scenario')}-{parameter}={value:g}"
            scenarios.append((value, self._loader.from_document(variant)))

        points = []
        for value, scenario in scenarios:
            summary, _ = self._run_scenario.execute(scenario, repetitions)
            points.append(SweepPoint(parameter=parameter, value=value, summary=summary))
        logger.info("Sweep finished", parameter=parameter, points=len(points))
        return points
