"""Command handlers for the fearbrake command line."""

import argparse
from dataclasses import replace
from pathlib import Path
from typing import List, Sequence

import structlog

from ...application.use_cases.evaluate_fis_use_case import EvaluateFisUseCase
from ...application.use_cases.run_scenario_use_case import RunScenarioUseCase
from ...application.use_cases.sweep_use_case import SweepUseCase
from ...application.use_cases.validate_undesirability_use_case import (
    ValidateUndesirabilityUseCase,
    ValidationReport,
)
from ...domain.entities.trace import RunSummary, SweepPoint
from ...domain.exceptions import ConfigurationError
from ...domain.repositories.rulebase_repository import IRulebaseRepository
from ...infrastructure.config.scenario_config import ScenarioLoader, load_document
from ...infrastructure.export.csv_trace_writer import write_sweep, write_trace
from ...infrastructure.export.summary_writer import write_summary
from ...infrastructure.export.svg_chart_writer import write_chart
from ..errors.error_handler import EXIT_COLLISION, EXIT_OK, EXIT_VALIDATION_FAILED

logger = structlog.get_logger(__name__)


def format_summary(summary: RunSummary) -> str:
    spearman = "n/a" if summary.spearman_mean is None else f"{summary.spearman_mean:.3f}"
    histogram = " ".join(f"{label}={count}" for label, count in summary.band_histogram.items())
    return (
        f"scenario {summary.scenario_id}: runs={summary.runs} collisions={summary.collisions} "
        f"min_gap={summary.min_gap:.4f} max_band={summary.max_band} "
        f"peak_intensity={summary.peak_intensity:.3f} "
        f"learner_activations={summary.learner_activations} spearman={spearman}\n"
        f"  bands: {histogram}"
    )


def format_report(report: ValidationReport) -> str:
    lines = [f"{'row':>3}  {'imp':>5}  {'ach':>5}  {'expected':>8}  {'actual':>8}  {'delta':>7}  result"]
    for check in report.rows:
        if check.passed:
            result = "pass"
        else:
            result = "expected-fail" if check.expected_fail else "FAIL"
        lines.append(
            f"{check.row:>3}  {check.imp_goal:>5.2f}  {check.ach_goal:>5.2f}  {check.expected:>8.3f}  "
            f"{check.actual:>8.4f}  {check.delta:>7.4f}  {result}"
        )
    passed = sum(1 for check in report.rows if check.passed)
    lines.append(
        f"{passed}/{len(report.rows)} rows within {report.tolerance:g} "
        f"({'amended' if report.amended else 'unamended'} rulebase): {'PASS' if report.passed else 'FAIL'}"
    )
    return "\n".join(lines)


def format_sweep(points: Sequence[SweepPoint]) -> str:
    lines = [
        f"{'value':>10}  {'runs':>4}  {'collisions':>10}  {'min_gap':>8}  "
        f"{'max_band':>8}  {'peak':>6}  {'activations':>11}"
    ]
    for point in points:
        summary = point.summary
        lines.append(
            f"{point.value:>10g}  {summary.runs:>4}  {summary.collisions:>10}  {summary.min_gap:>8.4f}  "
            f"{summary.max_band:>8}  {summary.peak_intensity:>6.3f}  {summary.learner_activations:>11}"
        )
    return "\n".join(lines)


def parse_values(raw: str) -> List[float]:
    """Comma-separated numbers."""
    try:
        return [float(item) for item in raw.split(",") if item.strip()]
    except ValueError:
        raise ConfigurationError(f"Sweep values must be numbers, got {raw!r}", ["values"]) from None


class CommandHandlers:
    """One handler per subcommand; each returns the process exit code."""

    def __init__(
        self,
        rulebase_repository: IRulebaseRepository,
        evaluate_fis_use_case: EvaluateFisUseCase,
        validate_use_case: ValidateUndesirabilityUseCase,
        run_scenario_use_case: RunScenarioUseCase,
        sweep_use_case: SweepUseCase,
        scenario_loader: ScenarioLoader,
    ):
        """Initialize command handlers with dependencies."""
        self._rulebase_repository = rulebase_repository
        self._evaluate_fis_use_case = evaluate_fis_use_case
        self._validate_use_case = validate_use_case
        self._run_scenario_use_case = run_scenario_use_case
        self._sweep_use_case = sweep_use_case
        self._scenario_loader = scenario_loader

    def handle_eval(self, args: argparse.Namespace) -> int:
        """Handle `eval NAME VALUE...`."""
        evaluation = self._evaluate_fis_use_case.execute(args.name, args.values, amended=args.amended)
        print(f"{evaluation.value:.4f} {evaluation.band.label}")
        return EXIT_OK

    def handle_validate(self, args: argparse.Namespace) -> int:
        """Handle `validate`."""
        report = self._validate_use_case.execute(tolerance=args.tolerance, amended=args.amended)
        print(format_report(report))
        return EXIT_OK if report.passed else EXIT_VALIDATION_FAILED

    def handle_run(self, args: argparse.Namespace) -> int:
        """Handle `run --config PATH`: traces, charts and summary under --out."""
        scenario = self._scenario_loader.load(Path(args.config))
        if args.seed is not None:
            scenario = replace(scenario, seed=args.seed)
        summary, runs = self._run_scenario_use_case.execute(scenario, args.reps)

        out_dir = Path(args.out) / scenario.scenario_id
        for run in runs:
            stem = f"run_{run.result.run_index:03d}"
            write_trace(run.logs, out_dir / f"{stem}.csv")
            if not args.no_chart:
                write_chart(run.logs, out_dir / f"{stem}.svg", title=f"{scenario.scenario_id} seed {run.result.seed}")
        write_summary(summary, out_dir / "summary.json")

        print(format_summary(summary))
        print(f"  output: {out_dir}")
        return EXIT_COLLISION if summary.collisions else EXIT_OK

    def handle_sweep(self, args: argparse.Namespace) -> int:
        """Handle `sweep --config PATH --param NAME --values CSV`."""
        document = load_document(Path(args.config))
        points = self._sweep_use_case.execute(document, args.param, parse_values(args.values), args.reps)
        out_path = Path(args.out) / f"sweep_{document.get('id', 'scenario')}_{args.param}.csv"
        write_sweep(points, out_path)
        print(format_sweep(points))
        print(f"  output: {out_path}")
        return EXIT_COLLISION if any(point.summary.collisions for point in points) else EXIT_OK

    def handle_rulebase(self, args: argparse.Namespace) -> int:
        """Handle `rulebase NAME`: print variables, terms and rules."""
        fis = self._rulebase_repository.get(args.name, amended=args.amended)
        print(f"rulebase {fis.name}: {', '.join(fis.input_names)} -> {fis.output.name}")
        for variable in (*fis.inputs, fis.output):
            print(f"  {variable.name} [{variable.lo:g}, {variable.hi:g}]")
            for label, mf in variable.terms:
                print(f"    {label:<10} ({mf.d:g}, {mf.e:g}, {mf.f:g})")
        print(f"  {len(fis.rules)} rules")
        for rule in fis.rules:
            condition = " AND ".join(f"{name} is {label}" for name, label in rule.antecedent)
            print(f"    IF {condition} THEN {fis.output.name} is {rule.consequent}")
        return EXIT_OK
