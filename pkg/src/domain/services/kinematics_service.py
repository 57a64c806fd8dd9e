"""World kinematics: leader profile, bullet command, pedestrian events, collisions."""

from dataclasses import replace
from typing import Optional

import numpy as np
import structlog

from ..entities.scenario import Scenario
from ..entities.world import PedestrianEvent, WorldState
from ..exceptions import PedestrianScheduleError, WorldTerminatedError
from ..value_objects.motor import MotorCommand
from .sight_distance_service import mph_to_patches_per_second

logger = structlog.get_logger(__name__)


def build_world(scenario: Scenario, run_index: int = 0) -> WorldState:
    """Initial world of one repetition, with its own generator and pedestrian schedule."""
    world = WorldState(
        bullet=scenario.bullet,
        target=scenario.target,
        rng=np.random.default_rng(scenario.seed_for(run_index)),
        leader=scenario.leader,
        tick_seconds=scenario.tick_seconds,
    )
    world = replace(
        world,
        bullet=replace(world.bullet, position=0.0),
        target=replace(world.target, position=scenario.separation),
    )
    if scenario.pedestrian is not None:
        event = scenario.pedestrian
        world = inject_pedestrian(world, event.tick, event.gap, event.crossing_ticks)
    return _check_collision(world)


def _materialize_pedestrian(world: WorldState) -> WorldState:
    """Place a pending pedestrian ahead of the bullet once its tick is reached."""
    event = world.pedestrian
    if event is None or event.visible or world.tick < event.tick:
        return world
    placed = replace(event, position=world.bullet.position + event.gap)
    logger.info("Pedestrian appeared", tick=world.tick, gap=event.gap)
    return replace(world, pedestrian=placed)


def _check_collision(world: WorldState) -> WorldState:
    """Record a collision when the bullet reaches the leader or an active pedestrian."""
    pedestrian_gap = world.pedestrian_gap
    if world.gap <= 0 or (pedestrian_gap is not None and pedestrian_gap <= 0):
        logger.warning(
            "Collision recorded",
            tick=world.tick,
            gap=world.gap,
            pedestrian_gap=pedestrian_gap,
        )
        return replace(world, collided=True)
    return world


def step_world(
    world: WorldState,
    bullet_command: MotorCommand,
    dt_ticks: int = 1,
    max_brake_decel: Optional[float] = None,
) -> WorldState:
    """
    Advance the world by dt_ticks.

    Per tick: the target applies its profile's command, the bullet applies
    `bullet_command` (Brake stops it this tick), both advance by their new
    speed, the tick counter moves on, a scheduled pedestrian appears, and a
    gap <= 0 terminates the run with a collision.

    Raises:
        WorldTerminatedError: If the world already recorded a collision
    """
    if world.collided:
        raise WorldTerminatedError(f"World collided at tick {world.tick}; it cannot be stepped")

    for _ in range(dt_ticks):
        target_command = world.leader.command(
            world.tick, world.rng, world.target.accel_rate, world.target.decel_rate
        )
        target = world.target.apply(target_command)
        target = target.advance(mph_to_patches_per_second(target.speed) * world.tick_seconds)
        bullet = world.bullet.apply(bullet_command, max_brake_decel)
        bullet = bullet.advance(mph_to_patches_per_second(bullet.speed) * world.tick_seconds)

        world = replace(
            world,
            bullet=bullet,
            target=target,
            tick=world.tick + 1,
        )
        world = _check_collision(_materialize_pedestrian(world))
        if world.collided:
            break
    return world


def inject_pedestrian(
    world: WorldState, tick: int, gap_patches: float, crossing_ticks: int = 200
) -> WorldState:
    """
    Schedule a stationary pedestrian `gap_patches` ahead of the bullet at `tick`.

    A pedestrian scheduled for the current tick appears immediately; the
    collision check then runs before any brake can be applied.

    Raises:
        PedestrianScheduleError: If the tick has already passed
    """
    if tick < world.tick:
        raise PedestrianScheduleError(
            f"Cannot inject a pedestrian at tick {tick}; the world is at tick {world.tick}"
        )
    world = replace(world, pedestrian=PedestrianEvent(tick=tick, gap=gap_patches, crossing_ticks=crossing_ticks))
    if tick == world.tick:
        world = _check_collision(_materialize_pedestrian(world))
    return world
