"""Unit tests for fear potential, intensity, bands and the appraisal pipeline."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.domain.exceptions import ConfigurationError
from src.domain.services.fear_appraisal_service import (
    PROXIMITY_TOKENS,
    classify_band,
    fear_intensity,
    fear_potential,
    proximity_value,
)
from src.domain.value_objects.fear import AppraisalInputs, FearConfig, FearState
from src.domain.value_objects.intensity_bands import DEFAULT_BANDS, Band, IntensityBands

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


class TestFearConfig:
    """Test cases for FearConfig validation."""

    def test_defaults(self):
        config = FearConfig()
        assert sum(config.weights) == pytest.approx(1.0)
        assert config.threshold == 0.0
        assert config.amended is True

    def test_weights_must_sum_to_one(self):
        with pytest.raises(ConfigurationError) as excinfo:
            FearConfig(weights=(0.5, 0.5, 0.5))
        assert excinfo.value.fields == ("weights",)

    def test_negative_weight_raises(self):
        with pytest.raises(ConfigurationError):
            FearConfig(weights=(1.2, -0.2, 0.0))

    def test_threshold_range(self):
        with pytest.raises(ConfigurationError):
            FearConfig(threshold=1.5)


class TestFearPotentialAndIntensity:
    """Test cases for the potential/threshold computation."""

    def test_equal_weights_mean(self):
        assert fear_potential(0.3, 0.6, 0.9, FearConfig()) == pytest.approx(0.6)

    def test_custom_weights(self):
        config = FearConfig(weights=(0.5, 0.5, 0.0))
        assert fear_potential(0.2, 0.4, 1.0, config) == pytest.approx(0.3)

    def test_intensity_is_excess_over_threshold(self):
        assert fear_intensity(0.7, 0.2) == pytest.approx(0.5)

    def test_intensity_zero_at_or_below_threshold(self):
        assert fear_intensity(0.3, 0.3) == 0.0
        assert fear_intensity(0.1, 0.4) == 0.0

    @given(u=unit, l=unit, i=unit, t=unit)
    def test_intensity_bounded_by_potential(self, u, l, i, t):
        potential = fear_potential(u, l, i, FearConfig(threshold=t))
        intensity = fear_intensity(potential, t)
        assert 0.0 <= intensity <= potential <= 1.0


class TestIntensityBands:
    """Test cases for band classification."""

    @pytest.mark.parametrize(
        "value,band",
        [
            (0.0, Band.VERY_LOW),
            (0.24, Band.VERY_LOW),
            (0.2401, Band.LOW),
            (0.5, Band.LOW),
            (0.61, Band.MEDIUM),
            (0.73, Band.MEDIUM),
            (0.76, Band.HIGH),
            (0.9, Band.HIGH),
            (0.95, Band.VERY_HIGH),
            (1.0, Band.VERY_HIGH),
        ],
    )
    def test_classify(self, value, band):
        assert classify_band(value) is band

    def test_out_of_range_values_are_clamped(self):
        assert classify_band(-0.5) is Band.VERY_LOW
        assert classify_band(1.5) is Band.VERY_HIGH

    @given(a=unit, b=unit)
    def test_classify_monotone(self, a, b):
        low, high = sorted((a, b))
        assert classify_band(low) <= classify_band(high)

    def test_representative_is_inside_band(self):
        for band in Band:
            assert DEFAULT_BANDS.classify(DEFAULT_BANDS.representative(band)) is band

    def test_labels_round_trip(self):
        assert [band.label for band in Band] == ["VeryLow", "Low", "Medium", "High", "VeryHigh"]
        assert Band.from_label("Medium") is Band.MEDIUM

    def test_braking_bands(self):
        assert [band for band in Band if band.is_braking()] == [Band.HIGH, Band.VERY_HIGH]

    def test_cuts_must_increase(self):
        with pytest.raises(ConfigurationError):
            IntensityBands(cuts=(0.5, 0.24, 0.73, 0.9))


class TestProximity:
    """Test cases for proximity tokens."""

    def test_tokens_sit_on_partition_peaks(self):
        assert [PROXIMITY_TOKENS[t] for t in ("NChance", "LChance", "MChance", "Going to", "About to")] == [
            0.0,
            0.25,
            0.5,
            0.75,
            1.0,
        ]

    def test_numbers_are_clamped(self):
        assert proximity_value(1.3) == 1.0
        assert proximity_value(0.4) == 0.4

    def test_unknown_token_raises(self):
        with pytest.raises(ConfigurationError):
            proximity_value("Soon")


class TestFearState:
    """Test cases for escalation of a fear state."""

    def make_state(self, intensity=0.3, band=Band.LOW):
        return FearState(
            undesirability=0.1,
            likelihood=0.2,
            ig=0.5,
            potential=intensity,
            threshold=0.0,
            intensity=intensity,
            band=band,
        )

    def test_escalate_raises_band_and_intensity(self):
        state = self.make_state().escalate(Band.VERY_HIGH, 0.95, "pedestrian")
        assert state.band is Band.VERY_HIGH
        assert state.intensity == 0.95
        assert state.escalated_by == "pedestrian"

    def test_escalate_never_lowers(self):
        state = self.make_state(0.8, Band.HIGH)
        assert state.escalate(Band.MEDIUM, 0.615, "sight_distance") is state

    def test_display_intensity(self):
        assert self.make_state(0.4912).display_intensity == 49.12

    def test_appraisal_inputs_are_clamped(self):
        inputs = AppraisalInputs(1.4, -0.1, 0.5, 2.0, 1.0, 0.0)
        assert (inputs.imp_goal, inputs.ach_goal, inputs.speed_norm) == (1.0, 0.0, 1.0)
