"""Linguistic variable value object and the canonical uniform partition."""

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from ..exceptions import InvalidPartitionError, RulebaseError
from .triangular_mf import TriangularMf


@dataclass(frozen=True)
class LinguisticVariable:
    """Named variable over a closed interval, with ordered labelled terms."""

    name: str
    lo: float
    hi: float
    terms: Tuple[Tuple[str, TriangularMf], ...]

    def __post_init__(self) -> None:
        """Validate domain, unique labels and strictly increasing peaks."""
        if not self.hi > self.lo:
            raise RulebaseError(f"Variable {self.name}: domain [{self.lo}, {self.hi}] is empty")
        if not self.terms:
            raise RulebaseError(f"Variable {self.name}: no terms")
        labels = [label for label, _ in self.terms]
        if len(set(labels)) != len(labels):
            raise RulebaseError(f"Variable {self.name}: duplicate term labels {labels}")
        peaks = [mf.e for _, mf in self.terms]
        if any(b <= a for a, b in zip(peaks, peaks[1:])):
            raise RulebaseError(f"Variable {self.name}: term peaks must strictly increase, got {peaks}")

    @property
    def labels(self) -> Tuple[str, ...]:
        """Term labels in peak order."""
        return tuple(label for label, _ in self.terms)

    def term(self, label: str) -> TriangularMf:
        """Look up a term by label."""
        for term_label, mf in self.terms:
            if term_label == label:
                return mf
        raise RulebaseError(f"Variable {self.name} has no term {label!r}")

    def clamp(self, x: float) -> float:
        """Clamp a crisp value into the domain."""
        return min(max(x, self.lo), self.hi)

    def fuzzify(self, x: float) -> Dict[str, float]:
        """Degree of every term for a (clamped) crisp value."""
        x = self.clamp(x)
        return {label: mf.degree(x) for label, mf in self.terms}


def uniform_partition(
    name: str, lo: float, hi: float, labels: Sequence[str], n: int = 5
) -> LinguisticVariable:
    """
    Build the canonical uniform partition of [lo, hi].

    Peaks sit at lo + k*(hi-lo)/(n-1). Each term's feet are the neighbouring
    peaks; boundary terms extend their outer foot one step past the domain so
    the endpoints are saturated (membership 1 at lo and hi).

    Args:
        name: Variable name
        lo: Domain lower bound
        hi: Domain upper bound
        labels: n labels in increasing order
        n: Number of terms (>= 2)

    Returns:
        LinguisticVariable whose memberships sum to 1 over the domain

    Raises:
        InvalidPartitionError: If n < 2 or len(labels) != n
    """
    if n < 2:
        raise InvalidPartitionError(f"Partition needs at least 2 terms, got {n}")
    if len(labels) != n:
        raise InvalidPartitionError(f"Expected {n} labels, got {len(labels)}")

    step = (hi - lo) / (n - 1)
    peaks = [lo + k * step for k in range(n)]
    peaks[-1] = hi
    terms = tuple(
        (label, TriangularMf(peak - step, peak, peak + step))
        for label, peak in zip(labels, peaks)
    )
    return LinguisticVariable(name=name, lo=lo, hi=hi, terms=terms)
