"""
Performance profiles over iteration counts.

For each method and factor x, the fraction of problems it solves within x
times the iterations of the best method on that problem.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional
from politician.errors import ProfileError

import numpy as np
import pandas as pd


PROFILE_NAME = "profile.csv"
PLOT_SCRIPT_NAME = "plot_profiles.py"

PLOT_SCRIPT = '''"""Plots profile.csv next to this script; needs matplotlib."""

from pathlib import Path

import matplotlib.pyplot as plt
import pandas as pd


here = Path(__file__).parent
profile = pd.read_csv(here / "profile.csv")
fig, ax = plt.subplots(figsize=(7, 4))
for method in profile.columns[1:]:
    ax.step(profile["x"], profile[method], where="post", label=method)
ax.set_xlim(1, profile["x"].max())
ax.set_ylim(0, 1.02)
ax.set_xlabel("within x times the best iteration count")
ax.set_ylabel("fraction of problems solved")
ax.legend()
fig.tight_layout()
fig.savefig(here / "profile.png", dpi=150)
'''


@dataclass(frozen=True, eq=False)
class ProfileCurve:
    x: np.ndarray
    fraction_solved: dict[str, np.ndarray]

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame({"x": self.x})
        for method in sorted(self.fraction_solved):
            frame[method] = self.fraction_solved[method]
        return frame


def default_grid() -> np.ndarray:
    return np.linspace(1.0, 10.0, 91)


def performance_profile(
    results: Mapping[str, Mapping[str, Optional[int]]],
    x_grid: np.ndarray | None = None,
) -> ProfileCurve:
    """`results` maps method -> problem -> iterations to solve, None when unsolved."""
    if not results:
        raise ProfileError("No methods to profile")
    problems = sorted({problem for counts in results.values() for problem in counts})
    if not problems:
        raise ProfileError("No problems to profile")
    x = default_grid() if x_grid is None else np.asarray(x_grid, dtype=np.float64)

    counts = np.array(
        [
            [np.nan if results[method].get(problem) is None else float(results[method][problem]) for problem in problems]
            for method in results
        ]
    )
    with np.errstate(invalid="ignore"):
        best = np.nanmin(np.where(np.isnan(counts), np.inf, counts), axis=0)
        ratios = counts / best

    fraction_solved = {}
    for row, method in enumerate(results):
        solved = ~np.isnan(ratios[row])
        fraction_solved[method] = np.array(
            [np.count_nonzero(solved & (ratios[row] <= factor)) / len(problems) for factor in x]
        )
    return ProfileCurve(x=x, fraction_solved=fraction_solved)


def write_profile(curve: ProfileCurve, output_dir: str | Path) -> Path:
    """Writes profile.csv and a matplotlib script that plots it."""
    output_dir = Path(output_dir)
    path = output_dir / PROFILE_NAME
    curve.to_frame().to_csv(path, index=False, float_format="%.6g")
    (output_dir / PLOT_SCRIPT_NAME).write_text(PLOT_SCRIPT, encoding="utf-8")
    return path
