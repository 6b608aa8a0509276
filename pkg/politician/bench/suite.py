from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional
from pydantic import BaseModel, Field
from politician.bench.config import BenchConfig, ProblemSpec
from politician.engine.driver import TRACE_COLUMNS, RunTrace, run
from politician.methods.geometric import GeometricPolitician
from politician.methods.registry import build_algorithm
from politician.problems import Problem
from politician.log import get_logger

import hashlib
import numpy as np


logger = get_logger("bench.suite")

SCHEMA_VERSION = 1
MANIFEST_NAME = "manifest.json"


class RunRecord(BaseModel):
    problem: str = Field(description="Problem instance name")
    method: str = Field(description="Algorithm name as configured, e.g. 'bfgs+'")
    politician: str = Field(description="Politician attached to the method")
    termination: str = Field(description="Why the run stopped")
    iterations: int = Field(description="Politician answers in the run")
    final_value: float = Field(description="Objective value of the last answer")
    best_value: float = Field(description="Best objective value of the run")
    gradient_evaluations: int
    value_evaluations: int
    solved_at: Optional[int] = Field(None, description="First iteration reaching the target accuracy")
    events: dict[str, int] = Field(default_factory=dict, description="Run event counts by kind")
    warm_newton_median: Optional[float] = Field(
        None, description="Median Newton iterations of warm-started center updates"
    )
    csv: str = Field(description="Trace file, relative to the output directory")


class Manifest(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, description="Version of the CSV and manifest schema")
    config_hash: str = Field(description="sha256 of the canonical configuration")
    columns: list[str] = Field(default_factory=lambda: list(TRACE_COLUMNS))
    runs: list[RunRecord] = Field(default_factory=list)

    def solved_counts(self) -> dict[str, dict[str, Optional[int]]]:
        """method -> problem -> iterations to solve (None when unsolved)."""
        counts: dict[str, dict[str, Optional[int]]] = {}
        for record in self.runs:
            counts.setdefault(record.method, {})[record.problem] = record.solved_at
        return counts


def config_hash(config: BenchConfig) -> str:
    canonical = config.model_dump_json(exclude={"output_dir", "workers"}, by_alias=True)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def trace_filename(problem: str, method: str) -> str:
    return f"{problem}__{method.replace('+', 'plus')}.csv"


def solved_iteration(trace: RunTrace, problem: Problem, spec: ProblemSpec, tol: float) -> int | None:
    """First iteration with f - f* <= eps (f0 - f*), or with a small gradient when f* is unknown."""
    epsilon = spec.target_epsilon
    if problem.f_star is not None:
        f_star = problem.f_star
        threshold = epsilon * (trace.steps[0].value - f_star)
        for step in trace.steps:
            if step.value - f_star <= threshold:
                return step.iteration
        return None

    threshold = tol if tol > 0.0 else epsilon * trace.steps[0].gradient_norm
    for step in trace.steps:
        if step.gradient_norm <= threshold:
            return step.iteration
    return None


def run_one(config: BenchConfig, spec: ProblemSpec, problem: Problem, method_name: str) -> tuple[RunTrace, RunRecord]:
    method, politician = build_algorithm(method_name, **config.politician_options())
    trace = run(method, politician, problem, problem.x0(), config.budget, tol=config.tol)

    filename = trace_filename(spec.name, method_name)
    trace.to_frame().to_csv(config.output_dir / filename, index=False, float_format="%.17g")

    events: dict[str, int] = {}
    for event in trace.events:
        events[event.kind] = events.get(event.kind, 0) + 1
    warm = politician.state.warm_newton_iterations if isinstance(politician, GeometricPolitician) else []
    record = RunRecord(
        problem=spec.name,
        method=method_name,
        politician=politician.name,
        termination=trace.termination,
        iterations=len(trace),
        final_value=trace.final.value,
        best_value=float(np.min(trace.values)),
        gradient_evaluations=trace.final.gradient_evaluations,
        value_evaluations=trace.final.value_evaluations,
        solved_at=solved_iteration(trace, problem, spec, config.tol),
        events=events,
        warm_newton_median=float(np.median(warm)) if warm else None,
        csv=filename,
    )
    return trace, record


def run_suite(config: BenchConfig, tracker=None) -> Manifest:
    """Runs every (problem, method) pair and writes the traces plus a manifest."""
    output_dir = Path(config.output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    problems = [(spec, spec.build()) for spec in config.problems]
    jobs = [(spec, problem, method) for spec, problem in problems for method in config.methods]
    logger.info(f"Running {len(jobs)} runs ({len(problems)} problems x {len(config.methods)} methods)")

    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(lambda job: run_one(config, *job), jobs))
    else:
        results = [run_one(config, *job) for job in jobs]

    manifest = Manifest(config_hash=config_hash(config), runs=[record for _, record in results])
    (output_dir / MANIFEST_NAME).write_text(manifest.model_dump_json(indent=2), encoding="utf-8")

    if tracker is not None:
        for (trace, record), (spec, _, _) in zip(results, jobs):
            tracker.log_run(config, spec, record, output_dir / record.csv)
    return manifest
