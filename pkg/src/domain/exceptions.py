"""Domain-specific exceptions."""

from typing import Iterable, Tuple


class DomainError(Exception):
    """Base exception for all domain errors."""
    pass


class InvalidMembershipError(DomainError):
    """Raised when a triangular membership function violates d <= e <= f."""
    pass


class InvalidPartitionError(DomainError):
    """Raised when a uniform partition cannot be built (n < 2, label mismatch)."""
    pass


class RulebaseError(DomainError):
    """Raised when a rulebase is malformed (unknown label, duplicate antecedent)."""
    pass


class RulebaseNotFoundError(RulebaseError):
    """Raised when a named rulebase or its file does not exist."""
    pass


class NoRuleCoverageError(DomainError):
    """Raised when no rule fires for the given inputs (incomplete rulebase)."""
    pass


class ConfigurationError(DomainError):
    """Raised when a fear, controller or scenario configuration is invalid."""

    def __init__(self, message: str, fields: Iterable[str] = ()) -> None:
        self.fields: Tuple[str, ...] = tuple(fields)
        if self.fields:
            message = f"{message} (fields: {', '.join(self.fields)})"
        super().__init__(message)


class WorldTerminatedError(DomainError):
    """Raised when stepping a world that already recorded a collision."""
    pass


class PedestrianScheduleError(DomainError):
    """Raised when a pedestrian is injected at a tick that has already passed."""
    pass
