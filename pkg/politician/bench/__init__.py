from politician.bench.config import BenchConfig, ProblemSpec
from politician.bench.profiles import ProfileCurve, performance_profile, write_profile
from politician.bench.suite import Manifest, RunRecord, run_suite, solved_iteration

__all__ = [
    "BenchConfig",
    "Manifest",
    "ProblemSpec",
    "ProfileCurve",
    "RunRecord",
    "performance_profile",
    "run_suite",
    "solved_iteration",
    "write_profile",
]
