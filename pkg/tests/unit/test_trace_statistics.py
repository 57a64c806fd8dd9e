"""Unit tests for run statistics."""

import math

import pytest

from src.application.services.trace_statistics import TraceStatistics
from src.domain.entities.trace import TickLog


def make_log(tick, gap, intensity, band="VeryLow"):
    return TickLog(
        tick=tick,
        time_ms=tick * 1000.0,
        bullet_position=0.0,
        bullet_speed=10.0,
        target_position=gap,
        target_speed=10.0,
        gap_patches=gap,
        gap_ft=gap * 100.0,
        ssd_ft=16.2,
        ssd_patches=0.162,
        undesirability=0.0,
        likelihood=0.0,
        ig=0.0,
        potential=intensity,
        intensity=intensity,
        band=band,
        expressed_band=band if intensity > 0 else "",
        command="Hold",
        leader_mode="Normal",
    )


class TestSpearman:
    """Test cases for gap/fear rank correlation."""

    def test_perfect_inverse_relation(self):
        logs = [make_log(t, gap, 1.0 / gap) for t, gap in enumerate([5.0, 4.0, 3.0, 2.0, 1.0])]
        assert TraceStatistics.spearman(logs) == pytest.approx(-1.0)

    def test_monotone_not_linear(self):
        logs = [make_log(t, gap, gap**3) for t, gap in enumerate([1.0, 2.0, 3.0, 4.0])]
        assert TraceStatistics.spearman(logs) == pytest.approx(1.0)

    def test_undefined_cases(self):
        assert TraceStatistics.spearman([]) is None
        assert TraceStatistics.spearman([make_log(0, 1.0, 0.5)]) is None
        assert TraceStatistics.spearman([make_log(t, 3.0, 0.1 * t) for t in range(5)]) is None


class TestSummaries:
    """Test cases for per-run and per-scenario summaries."""

    def logs(self):
        bands = ["VeryLow", "Medium", "High", "Medium", "High", "Low"]
        return [make_log(t, 6.0 - t, 0.1 * t, band) for t, band in enumerate(bands)]

    def test_band_histogram_lists_every_band(self):
        histogram = TraceStatistics.band_histogram(self.logs())
        assert histogram == {"VeryLow": 1, "Low": 1, "Medium": 2, "High": 2, "VeryHigh": 0}

    def test_summarize_run(self):
        result = TraceStatistics.summarize_run("s", 2, 9, self.logs(), False, None, 1)
        assert result.ticks == 6
        assert result.min_gap == 1.0
        assert result.max_band == "High"
        assert result.switch_count == 3
        assert result.peak_intensity == pytest.approx(0.5)
        assert result.seed == 9
        assert result.spearman == pytest.approx(-1.0)

    def test_empty_run(self):
        result = TraceStatistics.summarize_run("s", 0, 0, [], False, None, 0)
        assert result.ticks == 0
        assert math.isnan(result.min_gap)
        assert result.max_band == "VeryLow"
        assert result.spearman is None
        assert result.peak_intensity == 0.0

    def test_summarize_runs(self):
        first = TraceStatistics.summarize_run("s", 0, 0, self.logs(), False, None, 1)
        second = TraceStatistics.summarize_run("s", 1, 1, self.logs()[:2], True, 2, 0)
        summary = TraceStatistics.summarize_runs("s", [first, second], 0.5)
        assert summary.runs == 2
        assert summary.collisions == 1
        assert summary.min_gap == 1.0
        assert summary.max_band == "High"
        assert summary.learner_activations == 1
        assert summary.peak_intensity == pytest.approx(0.5)
        assert summary.band_histogram["Medium"] == 3
        assert summary.spearman_mean == pytest.approx(-1.0)
        assert summary.to_dict()["results"][1]["collision_tick"] == 2
