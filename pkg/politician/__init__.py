"""Black-box convex optimization with politicians."""

from politician.engine import (
    FirstOrderRecord,
    FunctionObjective,
    History,
    Oracle,
    OraclePolitician,
    RunTrace,
    run,
)
from politician.methods import GeometricPolitician, build_algorithm

__all__ = [
    "FirstOrderRecord",
    "FunctionObjective",
    "GeometricPolitician",
    "History",
    "Oracle",
    "OraclePolitician",
    "RunTrace",
    "build_algorithm",
    "run",
]
