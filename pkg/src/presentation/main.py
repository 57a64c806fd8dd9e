"""Main entry point for the fearbrake command line."""

import argparse
import sys
from typing import Optional, Sequence

from src.application.use_cases.evaluate_fis_use_case import EvaluateFisUseCase
from src.application.use_cases.run_scenario_use_case import RunScenarioUseCase
from src.application.use_cases.sweep_use_case import SweepUseCase
from src.application.use_cases.validate_undesirability_use_case import (
    DEFAULT_TOLERANCE,
    ValidateUndesirabilityUseCase,
)
from src.infrastructure.config.scenario_config import ScenarioLoader
from src.infrastructure.config.settings import settings as app_settings
from src.infrastructure.logging.logger import configure_logging, get_logger
from src.infrastructure.rulebases.json_rulebase_repository import RULEBASE_NAMES, JsonRulebaseRepository
from src.presentation.errors.error_handler import EXIT_USAGE, error_handler
from src.presentation.handlers.command_handlers import CommandHandlers

logger = get_logger(__name__)


def parse_bool(raw: str) -> bool:
    value = raw.strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {raw!r}")


def parse_seed(raw: str) -> int:
    seed = int(raw)
    if not 0 <= seed < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return seed


def positive_int(raw: str) -> int:
    value = int(raw)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fearbrake",
        description="Fear-driven rear-end collision avoidance: fuzzy appraisal, scenarios, reports.",
    )
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR (default: FEARBRAKE_LOG_LEVEL or INFO)")
    parser.add_argument("--rulebase-dir", default=None, help="Rulebase directory (default: FEARBRAKE_RULEBASE_DIR)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    eval_parser = subparsers.add_parser("eval", help="Evaluate one rulebase for crisp inputs")
    eval_parser.add_argument("name", choices=RULEBASE_NAMES)
    eval_parser.add_argument("values", nargs="+", help="One value per input (ig proximity also takes a token)")
    eval_parser.add_argument("--amended", type=parse_bool, default=True)

    validate_parser = subparsers.add_parser("validate", help="Reproduce the undesirability validation table")
    validate_parser.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    validate_parser.add_argument("--amended", type=parse_bool, default=True)

    run_parser = subparsers.add_parser("run", help="Run a scenario config")
    run_parser.add_argument("--config", required=True)
    run_parser.add_argument("--out", default=None, help="Output directory (default: FEARBRAKE_OUTPUT_DIR or out)")
    run_parser.add_argument("--reps", type=positive_int, default=None)
    run_parser.add_argument("--seed", type=parse_seed, default=None)
    run_parser.add_argument("--no-chart", action="store_true", help="Skip SVG charts")

    sweep_parser = subparsers.add_parser("sweep", help="Run a scenario once per value of a numeric field")
    sweep_parser.add_argument("--config", required=True)
    sweep_parser.add_argument("--param", required=True, help="Dotted field path, e.g. separation or bullet.deceleration")
    sweep_parser.add_argument("--values", required=True, help="Comma-separated values")
    sweep_parser.add_argument("--out", default=None)
    sweep_parser.add_argument("--reps", type=positive_int, default=None)

    rulebase_parser = subparsers.add_parser("rulebase", help="Describe a rulebase")
    rulebase_parser.add_argument("name", choices=RULEBASE_NAMES)
    rulebase_parser.add_argument("--amended", type=parse_bool, default=True)
    return parser


def setup_dependencies(rulebase_dir: Optional[str] = None) -> CommandHandlers:
    """Setup and wire all dependencies."""
    rulebase_repository = JsonRulebaseRepository(rulebase_dir)
    scenario_loader = ScenarioLoader()
    run_scenario_use_case = RunScenarioUseCase(rulebase_repository)
    return CommandHandlers(
        rulebase_repository=rulebase_repository,
        evaluate_fis_use_case=EvaluateFisUseCase(rulebase_repository),
        validate_use_case=ValidateUndesirabilityUseCase(rulebase_repository),
        run_scenario_use_case=run_scenario_use_case,
        sweep_use_case=SweepUseCase(run_scenario_use_case, scenario_loader),
        scenario_loader=scenario_loader,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0

    app_settings.reload()
    log_level = (args.log_level or app_settings.LOG_LEVEL).upper()
    if log_level not in app_settings.LOG_LEVELS:
        print(f"error: unknown log level {log_level}", file=sys.stderr)
        return EXIT_USAGE
    configure_logging(log_level)
    logger.debug("Command started", command=args.command)

    if getattr(args, "out", "") is None:
        args.out = str(app_settings.OUTPUT_DIR)

    handlers = setup_dependencies(args.rulebase_dir)
    dispatch = {
        "eval": handlers.handle_eval,
        "validate": handlers.handle_validate,
        "run": handlers.handle_run,
        "sweep": handlers.handle_sweep,
        "rulebase": handlers.handle_rulebase,
    }
    try:
        return dispatch[args.command](args)
    except Exception as e:
        return error_handler(e)


if __name__ == "__main__":
    sys.exit(main())
