"""Run a scenario: the tick loop, one TickLog per tick, seeded repetitions."""

import time
from dataclasses import dataclass
from typing import List, Optional, Tuple

import structlog

from ...domain.entities.scenario import Scenario
from ...domain.entities.trace import RunResult, RunSummary, TickLog
from ...domain.entities.world import WorldState
from ...domain.repositories.rulebase_repository import IRulebaseRepository
from ...domain.services.fear_appraisal_service import FearAppraisalService
from ...domain.services.fuzzy_inference_service import DEFAULT_STEP
from ...domain.services.kinematics_service import build_world, step_world
from ...domain.services.sight_distance_service import FEET_PER_PATCH
from ..services.sensor import Sensor
from ..services.trace_statistics import TraceStatistics
from .step_agent_use_case import AgentStep, IFearAppraiser, StepAgentUseCase

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class ScenarioRun:
    """One repetition: its trace and its summary."""

    result: RunResult
    logs: Tuple[TickLog, ...]


def tick_log(world: WorldState, step: AgentStep) -> TickLog:
    """Trace record of the world at a tick and the agent's decision on it."""
    fear = step.fear
    return TickLog(
        tick=world.tick,
        time_ms=world.time_ms,
        bullet_position=world.bullet.position,
        bullet_speed=world.bullet.speed,
        target_position=world.target.position,
        target_speed=world.target.speed,
        gap_patches=world.gap,
        gap_ft=world.gap * FEET_PER_PATCH,
        ssd_ft=step.ssd_ft,
        ssd_patches=step.ssd_ft / FEET_PER_PATCH,
        undesirability=fear.undesirability,
        likelihood=fear.likelihood,
        ig=fear.ig,
        potential=fear.potential,
        intensity=fear.intensity,
        band=fear.band.label,
        expressed_band=fear.band.label if fear.intensity > 0 else "",
        command=str(step.command),
        leader_mode=step.learner.leader_mode.value,
        escalated_by=fear.escalated_by,
        pedestrian_gap=world.pedestrian_gap,
    )


class RunScenarioUseCase:
    """Use case for running a scenario and its repetitions."""

    def __init__(self, rulebase_repository: IRulebaseRepository, step: float = DEFAULT_STEP):
        """
        Initialize run scenario use case.

        Args:
            rulebase_repository: Source of the three fear rulebases and the band table
            step: Defuzzification grid step
        """
        self._rulebase_repository = rulebase_repository
        self._step = step

    def appraiser_for(self, scenario: Scenario) -> IFearAppraiser:
        return FearAppraisalService.from_repository(
            self._rulebase_repository, amended=scenario.fear.amended, step=self._step
        )

    def run_once(
        self, scenario: Scenario, run_index: int = 0, appraiser: Optional[IFearAppraiser] = None
    ) -> ScenarioRun:
        """
        Run one repetition until the tick count is reached or a collision occurs.

        Args:
            scenario: Resolved scenario
            run_index: Repetition index; the run is seeded with seed + run_index
            appraiser: Fear appraiser to use instead of the rulebase-backed one
        """
        appraiser = appraiser or self.appraiser_for(scenario)
        agent = StepAgentUseCase(appraiser, scenario.controller, scenario.fear, scenario.tick_seconds)
        sensor = Sensor(scenario.controller.sensing_range)
        max_brake_decel = scenario.controller.max_brake_decel

        world = build_world(scenario, run_index)
        learner = agent.new_learner()
        logs: List[TickLog] = []

        while world.tick < scenario.ticks and not world.collided:
            step = agent.execute(learner, sensor.sense(world), world.tick)
            learner = step.learner
            logs.append(tick_log(world, step))
            world = step_world(world, step.command, max_brake_decel=max_brake_decel)

        collision_tick = world.tick if world.collided else None
        if world.collided:
            logger.warning(
                "Scenario run ended in collision",
                scenario_id=scenario.scenario_id,
                run_index=run_index,
                tick=world.tick,
            )

        result = TraceStatistics.summarize_run(
            scenario_id=scenario.scenario_id,
            run_index=run_index,
            seed=scenario.seed_for(run_index),
            logs=logs,
            collision=world.collided,
            collision_tick=collision_tick,
            learner_activations=learner.activations,
        )
        logger.debug(
            "Scenario run finished",
            scenario_id=scenario.scenario_id,
            run_index=run_index,
            ticks=len(logs),
            max_band=result.max_band,
        )
        return ScenarioRun(result=result, logs=tuple(logs))

    def execute(
        self, scenario: Scenario, repetitions: Optional[int] = None
    ) -> Tuple[RunSummary, List[ScenarioRun]]:
        """
        Run every repetition of a scenario.

        Args:
            scenario: Resolved scenario
            repetitions: Overrides the scenario's repetition count

        Returns:
            Summary over all repetitions and the individual runs
        """
        count = repetitions if repetitions is not None else scenario.repetitions
        started = time.perf_counter()
        appraiser = self.appraiser_for(scenario)
        runs = [self.run_once(scenario, index, appraiser) for index in range(count)]
        summary = TraceStatistics.summarize_runs(
            scenario.scenario_id, [run.result for run in runs], time.perf_counter() - started
        )
        logger.info(
            "Scenario finished",
            scenario_id=scenario.scenario_id,
            runs=summary.runs,
            collisions=summary.collisions,
            max_band=summary.max_band,
            wall_time_s=round(summary.wall_time_s, 3),
        )
        return summary, runs
