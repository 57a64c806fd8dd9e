"""Mamdani fuzzy inference: min implication, max aggregation, centroid defuzzification."""

from functools import lru_cache
from typing import Dict, Mapping

import numpy as np

from ..exceptions import NoRuleCoverageError, RulebaseError
from ..value_objects.fuzzy_rule import FisSpec
from ..value_objects.triangular_mf import TriangularMf

DEFAULT_STEP = 1e-4


def tri_membership(x: float, mf: TriangularMf) -> float:
    """Membership degree of x in a triangular set."""
    return mf.degree(x)


def sample_grid(lo: float, hi: float, step: float = DEFAULT_STEP) -> np.ndarray:
    """Fixed-step grid covering [lo, hi] inclusive."""
    count = int(round((hi - lo) / step)) + 1
    return np.linspace(lo, hi, count)


def defuzzify_centroid(grid: np.ndarray, aggregate: np.ndarray) -> float:
    """
    Centre of mass of a sampled membership curve.

    Fixed-step integration: with a uniform grid the step cancels, so the
    centroid is sum(x * mu) / sum(mu).

    Raises:
        NoRuleCoverageError: If the curve has zero total mass
    """
    mass = float(aggregate.sum())
    if mass <= 0.0:
        raise NoRuleCoverageError("No rule coverage: aggregate membership is identically zero")
    return float(np.dot(grid, aggregate) / mass)


class MamdaniEngine:
    """Evaluates one FisSpec; output term curves are sampled once and reused."""

    def __init__(self, fis: FisSpec, step: float = DEFAULT_STEP):
        """
        Initialize engine.

        Args:
            fis: Validated inference-system definition
            step: Defuzzification grid step over the output domain
        """
        self._fis = fis
        self._grid = sample_grid(fis.output.lo, fis.output.hi, step)
        self._curves = {label: mf.curve(self._grid) for label, mf in fis.output.terms}

    @property
    def fis(self) -> FisSpec:
        return self._fis

    @property
    def grid(self) -> np.ndarray:
        return self._grid

    def _check_inputs(self, inputs: Mapping[str, float]) -> None:
        expected = set(self._fis.input_names)
        if set(inputs) != expected:
            raise RulebaseError(
                f"FIS {self._fis.name} expects inputs {sorted(expected)}, got {sorted(inputs)}"
            )

    def firing_strengths(self, inputs: Mapping[str, float]) -> Dict[str, float]:
        """Strongest firing per output label (min over antecedents, max over rules)."""
        self._check_inputs(inputs)
        degrees = {
            name: self._fis.input(name).fuzzify(float(value)) for name, value in inputs.items()
        }
        strengths: Dict[str, float] = {}
        for rule in self._fis.rules:
            strength = min(degrees[name][label] for name, label in rule.antecedent)
            if strength > strengths.get(rule.consequent, 0.0):
                strengths[rule.consequent] = strength
        return strengths

    def aggregate(self, inputs: Mapping[str, float]) -> np.ndarray:
        """Pointwise max of every consequent clipped at its firing strength."""
        result = np.zeros_like(self._grid)
        for label, strength in self.firing_strengths(inputs).items():
            np.maximum(result, np.minimum(self._curves[label], strength), out=result)
        return result

    def evaluate(self, inputs: Mapping[str, float]) -> float:
        """Crisp output for crisp inputs (out-of-domain inputs are clamped)."""
        return defuzzify_centroid(self._grid, self.aggregate(inputs))


@lru_cache(maxsize=32)
def engine_for(fis: FisSpec, step: float = DEFAULT_STEP) -> MamdaniEngine:
    """Shared engine per (FisSpec, step); engines are read-only after construction."""
    return MamdaniEngine(fis, step)


def evaluate_fis(fis: FisSpec, inputs: Mapping[str, float], step: float = DEFAULT_STEP) -> float:
    """Evaluate a Mamdani FIS for crisp inputs."""
    return engine_for(fis, step).evaluate(inputs)
