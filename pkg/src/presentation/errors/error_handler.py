"""Exception to exit-code mapping for the command line."""

import sys

import structlog

from ...domain.exceptions import (
    ConfigurationError,
    DomainError,
    InvalidMembershipError,
    InvalidPartitionError,
    PedestrianScheduleError,
    RulebaseError,
)

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_COLLISION = 3
EXIT_VALIDATION_FAILED = 4

_USAGE_ERRORS = (
    ConfigurationError,
    RulebaseError,
    InvalidMembershipError,
    InvalidPartitionError,
    PedestrianScheduleError,
)


def error_handler(error: BaseException) -> int:
    """Log an error raised by a command and return its exit code."""
    if isinstance(error, _USAGE_ERRORS):
        logger.error("Invalid input", error=str(error), error_type=type(error).__name__)
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE

    if isinstance(error, DomainError):
        logger.error("Command failed", error=str(error), error_type=type(error).__name__, exc_info=error)
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INTERNAL

    # Don't expose internals beyond the error type on stderr
    logger.error("Unexpected error", error=str(error), error_type=type(error).__name__, exc_info=error)
    print(f"internal error: {type(error).__name__}", file=sys.stderr)
    return EXIT_INTERNAL
