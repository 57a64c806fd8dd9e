"""Run-level statistics over tick traces."""

import math
from collections import Counter
from typing import Dict, Optional, Sequence

import numpy as np
from scipy.stats import spearmanr

from ...domain.entities.trace import RunResult, RunSummary, TickLog
from ...domain.services.driving_rule_service import count_switches
from ...domain.value_objects.intensity_bands import Band


class TraceStatistics:
    """Summaries of one trace and of a batch of repetitions."""

    @staticmethod
    def spearman(logs: Sequence[TickLog]) -> Optional[float]:
        """Spearman rank correlation between gap and fear intensity; None when undefined."""
        if len(logs) < 2:
            return None
        gaps = np.array([log.gap_patches for log in logs])
        intensities = np.array([log.intensity for log in logs])
        if np.ptp(gaps) == 0.0 or np.ptp(intensities) == 0.0:
            return None
        rho, _ = spearmanr(gaps, intensities)
        return None if math.isnan(rho) else float(rho)

    @staticmethod
    def band_histogram(logs: Sequence[TickLog]) -> Dict[str, int]:
        counts = Counter(log.band for log in logs)
        return {band.label: counts.get(band.label, 0) for band in Band}

    @classmethod
    def summarize_run(
        cls,
        scenario_id: str,
        run_index: int,
        seed: int,
        logs: Sequence[TickLog],
        collision: bool,
        collision_tick: Optional[int],
        learner_activations: int,
    ) -> RunResult:
        bands = [Band.from_label(log.band) for log in logs]
        return RunResult(
            scenario_id=scenario_id,
            run_index=run_index,
            seed=seed,
            ticks=len(logs),
            collision=collision,
            collision_tick=collision_tick,
            min_gap=min((log.gap_patches for log in logs), default=math.nan),
            max_band=max(bands).label if bands else Band.VERY_LOW.label,
            peak_intensity=max((log.intensity for log in logs), default=0.0),
            switch_count=count_switches(enumerate(bands)),
            learner_activations=learner_activations,
            spearman=cls.spearman(logs),
            band_histogram=cls.band_histogram(logs),
        )

    @staticmethod
    def summarize_runs(scenario_id: str, results: Sequence[RunResult], wall_time_s: float) -> RunSummary:
        histogram: Counter = Counter()
        for result in results:
            histogram.update(result.band_histogram)
        rhos = [result.spearman for result in results if result.spearman is not None]
        gaps = [result.min_gap for result in results if not math.isnan(result.min_gap)]
        return RunSummary(
            scenario_id=scenario_id,
            runs=len(results),
            collisions=sum(1 for result in results if result.collision),
            min_gap=min(gaps, default=math.nan),
            max_band=max(
                (Band.from_label(result.max_band) for result in results), default=Band.VERY_LOW
            ).label,
            peak_intensity=max((result.peak_intensity for result in results), default=0.0),
            band_histogram={band.label: histogram.get(band.label, 0) for band in Band},
            learner_activations=sum(result.learner_activations for result in results),
            spearman_mean=float(np.mean(rhos)) if rhos else None,
            spearman_max=max(rhos) if rhos else None,
            wall_time_s=wall_time_s,
            results=tuple(results),
        )
