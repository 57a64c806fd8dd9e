"""Static fear-and-gap line chart of a run, as SVG."""

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from ...domain.entities.trace import TickLog  # noqa: E402

plt.rcParams["svg.hashsalt"] = "fearbrake"
plt.rcParams["svg.fonttype"] = "none"


def write_chart(logs: Sequence[TickLog], path: Path, title: str = "") -> Path:
    """
    Plot fear intensity (0-100) and gap (patches) against tick.

    Output carries no timestamp so identical runs give identical files.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    ticks = [log.tick for log in logs]

    fig, fear_axis = plt.subplots(figsize=(8, 4.5))
    gap_axis = fear_axis.twinx()
    fear_line = fear_axis.plot(ticks, [log.intensity * 100.0 for log in logs], color="tab:red", label="Fear intensity")
    gap_line = gap_axis.plot(ticks, [log.gap_patches for log in logs], color="tab:blue", label="Gap (patches)")

    fear_axis.set_xlabel("Tick")
    fear_axis.set_ylabel("Fear intensity")
    fear_axis.set_ylim(0, 100)
    gap_axis.set_ylabel("Gap (patches)")
    lines = fear_line + gap_line
    fear_axis.legend(lines, [line.get_label() for line in lines], loc="upper right")
    if title:
        fear_axis.set_title(title)

    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return path
