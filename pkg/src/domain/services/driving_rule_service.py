"""Driving rules i-iv: band to motor command, and the traffic-pattern learner."""

from dataclasses import replace
from typing import Iterable, Tuple

import structlog

from ..entities.learner import LeaderMode, LearnerState
from ..value_objects.intensity_bands import Band
from ..value_objects.motor import CommandKind, DrivingRegimes, MotorCommand

logger = structlog.get_logger(__name__)


def _rule_ii(regimes: DrivingRegimes, closing_speed: float) -> MotorCommand:
    regime = regimes.rule_ii
    if closing_speed < 0:
        return MotorCommand(CommandKind.ACCELERATE, regime.accel_rate)
    return MotorCommand(CommandKind.DECELERATE, regime.decel_rate)


def select_driving_rule(
    band: Band,
    learner: LearnerState,
    regimes: DrivingRegimes,
    closing_speed: float = 0.0,
) -> MotorCommand:
    """
    Map a fear band to a motor command.

    - High/VeryHigh: Brake (rule iii), whatever the learner says.
    - Aggressive leader: rule ii for every other band (rule iv).
    - VeryLow: accelerate at the high rate (rule i).
    - Low: accelerate at the high rate; decelerate at the low rate while
      the gap shrinks (rule i).
    - Medium: decelerate at the high rate; accelerate at the low rate only
      while the gap opens (rule ii).

    Args:
        band: Fear band of this tick
        learner: Learner state after this tick's update
        regimes: Rule i/ii rates
        closing_speed: Positive when the gap shrinks, negative when it opens
    """
    if band.is_braking():
        return MotorCommand.brake()
    if learner.aggressive or band is Band.MEDIUM:
        return _rule_ii(regimes, closing_speed)

    regime = regimes.rule_i
    if band is Band.LOW and closing_speed > 0:
        return MotorCommand(CommandKind.DECELERATE, regime.decel_rate)
    return MotorCommand(CommandKind.ACCELERATE, regime.accel_rate)


def _is_switch(previous: Band, current: Band) -> bool:
    """High-or-VeryHigh to Medium, or back."""
    pair = {previous, current}
    return Band.MEDIUM in pair and bool(pair & {Band.HIGH, Band.VERY_HIGH})


def count_switches(history: Iterable[Tuple[int, Band]]) -> int:
    """Number of consecutive High<->Medium transitions in a band history."""
    bands = [band for _, band in history]
    return sum(1 for previous, current in zip(bands, bands[1:]) if _is_switch(previous, current))


def update_learner(learner: LearnerState, band: Band, tick: int) -> LearnerState:
    """
    Record this tick's band and update the leader mode.

    The history keeps the last `window_ticks` ticks. A new High<->Medium
    switch that brings the in-window count to `switch_threshold` latches
    Aggressive until `tick + hold_ticks`; every further qualifying switch
    extends the hold. Once the hold expires with no new switch the learner
    reverts to Normal.
    """
    if tick <= learner.last_tick:
        logger.warning("Learner tick not increasing", tick=tick, last_tick=learner.last_tick)

    window_start = tick - learner.window_ticks
    history = tuple(entry for entry in learner.band_history if entry[0] > window_start) + ((tick, band),)
    new_switch = len(history) > 1 and _is_switch(history[-2][1], band)
    switches = count_switches(history)

    if new_switch and switches >= learner.switch_threshold:
        if not learner.aggressive:
            logger.info("Leader classified aggressive", tick=tick, switches=switches)
        return replace(
            learner,
            band_history=history,
            leader_mode=LeaderMode.AGGRESSIVE,
            hold_until_tick=tick + learner.hold_ticks,
            activations=learner.activations + (0 if learner.aggressive else 1),
        )

    if learner.aggressive and tick >= learner.hold_until_tick:
        logger.info("Leader classified normal", tick=tick, switches=switches)
        return replace(learner, band_history=history, leader_mode=LeaderMode.NORMAL)

    return replace(learner, band_history=history)
