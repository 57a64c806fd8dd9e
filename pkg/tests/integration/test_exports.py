"""Integration tests for CSV traces, JSON summaries and SVG charts."""

import json
import math

from src.application.services.trace_statistics import TraceStatistics
from src.domain.entities.trace import TickLog
from src.infrastructure.export.csv_trace_writer import format_cell, read_trace_rows, write_trace
from src.infrastructure.export.summary_writer import summary_document, write_summary
from src.infrastructure.export.svg_chart_writer import write_chart
from tests.unit.test_trace_statistics import make_log


def sample_logs():
    return [make_log(t, 5.0 - 0.5 * t, 0.05 * t, "Low") for t in range(6)]


class TestCsvTrace:
    """Test cases for trace files."""

    def test_cell_formatting(self):
        assert format_cell(0.1) == "0.100000"
        assert format_cell(None) == ""
        assert format_cell(True) == "true"
        assert format_cell(7) == "7"

    def test_header_follows_tick_log_fields(self, tmp_path):
        path = write_trace(sample_logs(), tmp_path / "trace.csv")
        header = path.read_text(encoding="utf-8").splitlines()[0]
        assert header.split(",") == list(TickLog.columns())
        assert header.startswith("tick,time_ms,bullet_position")

    def test_empty_trace_keeps_header(self, tmp_path):
        path = write_trace([], tmp_path / "nested" / "empty.csv")
        assert path.read_text(encoding="utf-8").splitlines() == [",".join(TickLog.columns())]

    def test_rows_read_back(self, tmp_path):
        rows = read_trace_rows(write_trace(sample_logs(), tmp_path / "trace.csv"))
        assert len(rows) == 6
        assert rows[2]["gap_patches"] == "4.000000"
        assert rows[0]["expressed_band"] == ""
        assert rows[1]["expressed_band"] == "Low"
        assert rows[0]["pedestrian_gap"] == ""


class TestSummaryJson:
    """Test cases for summary files."""

    def test_nan_becomes_null(self, tmp_path):
        empty = TraceStatistics.summarize_run("s", 0, 0, [], False, None, 0)
        summary = TraceStatistics.summarize_runs("s", [empty], 0.1)
        assert math.isnan(summary.min_gap)
        assert summary_document(summary)["min_gap"] is None

        data = json.loads(write_summary(summary, tmp_path / "summary.json").read_text())
        assert data["runs"] == 1
        assert data["results"][0]["spearman"] is None
        assert set(data["band_histogram"]) == {"VeryLow", "Low", "Medium", "High", "VeryHigh"}


class TestSvgChart:
    """Test cases for charts."""

    def test_writes_svg(self, tmp_path):
        path = write_chart(sample_logs(), tmp_path / "run.svg", title="sample")
        text = path.read_text(encoding="utf-8")
        assert "<svg" in text
        assert "Fear intensity" in text

    def test_identical_runs_identical_files(self, tmp_path):
        first = write_chart(sample_logs(), tmp_path / "a.svg").read_bytes()
        second = write_chart(sample_logs(), tmp_path / "b.svg").read_bytes()
        assert first == second

    def test_empty_run_still_charts(self, tmp_path):
        assert write_chart([], tmp_path / "empty.svg").exists()
