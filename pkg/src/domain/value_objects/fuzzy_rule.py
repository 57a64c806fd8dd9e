"""Fuzzy rule and inference-system definition value objects."""

from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

from ..exceptions import RulebaseError
from .linguistic_variable import LinguisticVariable


@dataclass(frozen=True)
class FuzzyRule:
    """Conjunctive IF-THEN rule: one label per input variable, one output label."""

    antecedent: Tuple[Tuple[str, str], ...]
    consequent: str

    @classmethod
    def of(cls, antecedent: Mapping[str, str], consequent: str) -> "FuzzyRule":
        """Create a rule from a {variable: label} mapping."""
        return cls(antecedent=tuple(sorted(antecedent.items())), consequent=consequent)

    def label_for(self, variable: str) -> str:
        """Antecedent label used for one input variable."""
        for name, label in self.antecedent:
            if name == variable:
                return label
        raise RulebaseError(f"Rule has no antecedent for variable {variable!r}")


@dataclass(frozen=True)
class FisSpec:
    """Mamdani inference system: input variables, output variable, rule list."""

    name: str
    inputs: Tuple[LinguisticVariable, ...]
    output: LinguisticVariable
    rules: Tuple[FuzzyRule, ...]
    _input_index: Dict[str, LinguisticVariable] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        """Validate labels, arity and antecedent uniqueness."""
        if not self.inputs:
            raise RulebaseError(f"FIS {self.name}: at least one input variable is required")
        if not self.rules:
            raise RulebaseError(f"FIS {self.name}: rule list is empty")

        index = {variable.name: variable for variable in self.inputs}
        if len(index) != len(self.inputs):
            raise RulebaseError(f"FIS {self.name}: duplicate input variable names")
        object.__setattr__(self, "_input_index", index)

        seen = set()
        for rule in self.rules:
            names = {name for name, _ in rule.antecedent}
            if names != set(index):
                raise RulebaseError(
                    f"FIS {self.name}: rule antecedent {dict(rule.antecedent)} "
                    f"must name exactly {sorted(index)}"
                )
            for name, label in rule.antecedent:
                if label not in index[name].labels:
                    raise RulebaseError(f"FIS {self.name}: unknown label {label!r} for {name}")
            if rule.consequent not in self.output.labels:
                raise RulebaseError(
                    f"FIS {self.name}: unknown output label {rule.consequent!r}"
                )
            if rule.antecedent in seen:
                raise RulebaseError(
                    f"FIS {self.name}: duplicate antecedent {dict(rule.antecedent)}"
                )
            seen.add(rule.antecedent)

    @property
    def input_names(self) -> Tuple[str, ...]:
        """Input variable names in declaration order."""
        return tuple(variable.name for variable in self.inputs)

    def input(self, name: str) -> LinguisticVariable:
        """Look up an input variable by name."""
        try:
            return self._input_index[name]
        except KeyError:
            raise RulebaseError(f"FIS {self.name} has no input {name!r}") from None
