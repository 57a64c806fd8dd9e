"""Structured logging configuration."""

import logging
import sys
from typing import List, Optional, TextIO

import structlog


def _renderer_chain(stream: TextIO) -> List[structlog.types.Processor]:
    """Console output for a terminal, one JSON object per line otherwise."""
    if stream.isatty():
        return [structlog.dev.ConsoleRenderer()]
    return [structlog.processors.format_exc_info, structlog.processors.JSONRenderer(sort_keys=True)]


def configure_logging(log_level: str = "INFO", stream: Optional[TextIO] = None) -> None:
    """
    Configure structured logging with structlog.

    Diagnostics go to stderr so stdout carries only command results
    (eval values, validation rows, run summaries).

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        stream: Target stream; resolved at call time, defaults to sys.stderr
    """
    level = getattr(logging, log_level.upper(), logging.INFO)
    target = stream if stream is not None else sys.stderr

    logging.basicConfig(format="%(message)s", stream=target, level=level)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.dev.set_exc_info,
            structlog.processors.TimeStamper(fmt="iso"),
            *_renderer_chain(target),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=target),
        cache_logger_on_first_use=False,
    )


def get_logger(name: str = __name__) -> structlog.BoundLogger:
    """Get a structured logger bound to `name`."""
    return structlog.get_logger(name)
