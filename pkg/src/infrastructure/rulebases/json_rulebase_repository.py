"""JSON file implementation of the rulebase repository."""

import json
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import structlog

from ...domain.exceptions import RulebaseError, RulebaseNotFoundError
from ...domain.repositories.rulebase_repository import IRulebaseRepository
from ...domain.value_objects.fuzzy_rule import FisSpec, FuzzyRule
from ...domain.value_objects.intensity_bands import IntensityBands
from ...domain.value_objects.linguistic_variable import LinguisticVariable
from ...domain.value_objects.triangular_mf import TriangularMf
from ..config.settings import settings as app_settings

logger = structlog.get_logger(__name__)

RULEBASE_NAMES = ("undesirability", "likelihood", "ig")
UNAMENDED_SUFFIX = "_unamended"


def parse_rulebase(document: Dict[str, Any]) -> FisSpec:
    """
    Build a FisSpec from the rulebase JSON document.

    Format:
        {"name", "output": <variable name>,
         "variables": [{"name", "domain": [lo, hi], "terms": [{"label", "d", "e", "f"}]}],
         "rules": [{"if": {<variable>: <label>, ...}, "then": <label>}]}

    Raises:
        RulebaseError: If the document is malformed or fails validation
    """
    try:
        variables = []
        for entry in document["variables"]:
            lo, hi = entry["domain"]
            terms = tuple(
                (term["label"], TriangularMf(float(term["d"]), float(term["e"]), float(term["f"])))
                for term in entry["terms"]
            )
            variables.append(LinguisticVariable(entry["name"], float(lo), float(hi), terms))

        output_name = document["output"]
        outputs = [v for v in variables if v.name == output_name]
        if len(outputs) != 1:
            raise RulebaseError(f"Rulebase output {output_name!r} must name exactly one variable")
        inputs = tuple(v for v in variables if v.name != output_name)
        rules = tuple(FuzzyRule.of(rule["if"], rule["then"]) for rule in document["rules"])
        return FisSpec(name=document["name"], inputs=inputs, output=outputs[0], rules=rules)
    except (KeyError, TypeError, ValueError) as e:
        raise RulebaseError(f"Malformed rulebase document: {e}") from e


class JsonRulebaseRepository(IRulebaseRepository):
    """Loads rulebases from `<dir>/<name>.json`; parsed specs are cached per instance."""

    def __init__(self, directory: Optional[Path] = None):
        """
        Initialize repository.

        Args:
            directory: Rulebase directory (defaults to FEARBRAKE_RULEBASE_DIR)
        """
        self._directory = Path(directory) if directory is not None else app_settings.RULEBASE_DIR
        self._cache: Dict[str, FisSpec] = {}

    @property
    def directory(self) -> Path:
        return self._directory

    def _read(self, stem: str) -> Dict[str, Any]:
        path = self._directory / f"{stem}.json"
        if not path.is_file():
            raise RulebaseNotFoundError(f"Rulebase file not found: {path}")
        try:
            with path.open(encoding="utf-8") as handle:
                return json.load(handle)
        except json.JSONDecodeError as e:
            raise RulebaseError(f"Invalid JSON in {path}: {e}") from e

    def get(self, name: str, amended: bool = True) -> FisSpec:
        """Get rulebase by name; amended=False selects the unamended undesirability table."""
        if name not in RULEBASE_NAMES:
            raise RulebaseNotFoundError(
                f"Unknown rulebase {name!r}; expected one of {', '.join(RULEBASE_NAMES)}"
            )
        stem = name if amended or name != "undesirability" else name + UNAMENDED_SUFFIX
        if stem not in self._cache:
            self._cache[stem] = parse_rulebase(self._read(stem))
            logger.debug("Rulebase loaded", rulebase=stem, directory=str(self._directory))
        return self._cache[stem]

    def get_bands(self) -> IntensityBands:
        """Get band table from bands.json."""
        document = self._read("bands")
        try:
            cuts = tuple(float(c) for c in document["cuts"])
        except (KeyError, TypeError, ValueError) as e:
            raise RulebaseError(f"Malformed band table: {e}") from e
        return IntensityBands(cuts=cuts)  # type: ignore[arg-type]

    def names(self) -> Tuple[str, ...]:
        return RULEBASE_NAMES
