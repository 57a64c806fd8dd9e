"""Unit tests for the driving rules and the traffic-pattern learner."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.domain.entities.learner import LeaderMode, LearnerState
from src.domain.exceptions import ConfigurationError
from src.domain.services.driving_rule_service import count_switches, select_driving_rule, update_learner
from src.domain.value_objects.intensity_bands import Band
from src.domain.value_objects.motor import CommandKind, DrivingRegimes, MotorCommand

REGIMES = DrivingRegimes(high_accel=0.05, high_decel=0.05, low_rate=0.03)
NORMAL = LearnerState()
AGGRESSIVE = LearnerState(leader_mode=LeaderMode.AGGRESSIVE, hold_until_tick=100)


def feed(learner, bands, start=0):
    for offset, band in enumerate(bands):
        learner = update_learner(learner, band, start + offset)
    return learner


class TestSelectDrivingRule:
    """Test cases for band to command mapping."""

    def test_very_low_accelerates_fast(self):
        assert select_driving_rule(Band.VERY_LOW, NORMAL, REGIMES) == MotorCommand(CommandKind.ACCELERATE, 0.05)

    def test_low_eases_off_while_closing(self):
        assert select_driving_rule(Band.LOW, NORMAL, REGIMES, 2.0) == MotorCommand(CommandKind.DECELERATE, 0.03)
        assert select_driving_rule(Band.LOW, NORMAL, REGIMES, 0.0) == MotorCommand(CommandKind.ACCELERATE, 0.05)

    def test_medium_decelerates_unless_gap_opens(self):
        assert select_driving_rule(Band.MEDIUM, NORMAL, REGIMES, 0.0) == MotorCommand(CommandKind.DECELERATE, 0.05)
        assert select_driving_rule(Band.MEDIUM, NORMAL, REGIMES, -1.0) == MotorCommand(CommandKind.ACCELERATE, 0.03)

    @pytest.mark.parametrize("band", [Band.HIGH, Band.VERY_HIGH])
    @pytest.mark.parametrize("learner", [NORMAL, AGGRESSIVE])
    def test_high_bands_brake(self, band, learner):
        assert select_driving_rule(band, learner, REGIMES).kind is CommandKind.BRAKE

    def test_aggressive_leader_uses_cautious_regime(self):
        assert select_driving_rule(Band.VERY_LOW, AGGRESSIVE, REGIMES, 0.0) == MotorCommand(
            CommandKind.DECELERATE, 0.05
        )
        assert select_driving_rule(Band.VERY_LOW, AGGRESSIVE, REGIMES, -1.0) == MotorCommand(
            CommandKind.ACCELERATE, 0.03
        )

    @given(closing=st.floats(min_value=-50, max_value=50, allow_nan=False))
    def test_response_never_relaxes_as_fear_rises(self, closing):
        urgencies = [select_driving_rule(band, NORMAL, REGIMES, closing).urgency() for band in Band]
        assert urgencies == sorted(urgencies)


class TestCountSwitches:
    """Test cases for High<->Medium switch counting."""

    def test_counts_both_directions(self):
        history = list(enumerate([Band.MEDIUM, Band.HIGH, Band.MEDIUM, Band.VERY_HIGH, Band.LOW]))
        assert count_switches(history) == 3

    def test_other_transitions_do_not_count(self):
        history = list(enumerate([Band.LOW, Band.MEDIUM, Band.MEDIUM, Band.HIGH, Band.VERY_HIGH, Band.VERY_LOW]))
        assert count_switches(history) == 1

    @given(st.lists(st.sampled_from(list(Band)), max_size=60))
    def test_matches_pairwise_definition(self, bands):
        switching_pairs = {
            (Band.MEDIUM, Band.HIGH),
            (Band.HIGH, Band.MEDIUM),
            (Band.MEDIUM, Band.VERY_HIGH),
            (Band.VERY_HIGH, Band.MEDIUM),
        }
        expected = sum(1 for pair in zip(bands, bands[1:]) if pair in switching_pairs)
        assert count_switches(list(enumerate(bands))) == expected


class TestUpdateLearner:
    """Test cases for the aggressive-leader learner."""

    def test_threshold_switches_latch_aggressive(self):
        learner = feed(LearnerState(), [Band.MEDIUM, Band.HIGH, Band.MEDIUM, Band.HIGH])
        assert learner.leader_mode is LeaderMode.AGGRESSIVE
        assert learner.hold_until_tick == 3 + 250
        assert learner.activations == 1

    def test_below_threshold_stays_normal(self):
        learner = feed(LearnerState(), [Band.MEDIUM, Band.HIGH, Band.MEDIUM, Band.LOW, Band.LOW])
        assert learner.leader_mode is LeaderMode.NORMAL
        assert learner.activations == 0

    def test_switches_outside_window_are_forgotten(self):
        learner = LearnerState(window_ticks=10)
        learner = feed(learner, [Band.MEDIUM, Band.HIGH], start=0)
        learner = feed(learner, [Band.MEDIUM, Band.HIGH], start=20)
        learner = feed(learner, [Band.MEDIUM, Band.HIGH], start=40)
        assert learner.leader_mode is LeaderMode.NORMAL
        assert all(tick > 30 for tick, _ in learner.band_history)

    def test_hold_then_revert(self):
        learner = feed(LearnerState(hold_ticks=5), [Band.MEDIUM, Band.HIGH, Band.MEDIUM, Band.HIGH])
        learner = feed(learner, [Band.VERY_LOW] * 4, start=4)
        assert learner.aggressive
        learner = update_learner(learner, Band.VERY_LOW, 8)
        assert learner.leader_mode is LeaderMode.NORMAL

    def test_reactivation_counts_again(self):
        learner = feed(LearnerState(hold_ticks=5), [Band.MEDIUM, Band.HIGH, Band.MEDIUM, Band.HIGH])
        learner = feed(learner, [Band.VERY_LOW] * 5, start=4)
        assert not learner.aggressive
        learner = feed(learner, [Band.MEDIUM, Band.HIGH], start=9)
        assert learner.aggressive
        assert learner.activations == 2

    def test_further_switches_extend_hold(self):
        learner = feed(LearnerState(hold_ticks=5), [Band.MEDIUM, Band.HIGH, Band.MEDIUM, Band.HIGH, Band.MEDIUM])
        assert learner.hold_until_tick == 4 + 5
        assert learner.activations == 1

    def test_invalid_parameters(self):
        with pytest.raises(ConfigurationError):
            LearnerState(window_ticks=0)
        with pytest.raises(ConfigurationError):
            LearnerState(switch_threshold=0)
