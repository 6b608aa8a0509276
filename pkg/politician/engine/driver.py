from dataclasses import dataclass, field
from typing import Literal
from politician.engine.oracle import Oracle, OraclePolitician, RunEvent
from politician.engine.protocols import FirstOrderMethod, Politician
from politician.engine.records import History, Objective, Vector
from politician.errors import ConfigError, EvaluationError, PoliticianContractError
from politician.log import get_logger

import numpy as np
import pandas as pd
import time


logger = get_logger("engine.driver")

CONTRACT_SLACK = 1e-12
STALL_TOLERANCE = 1e-15
STALL_WINDOW = 5

TRACE_COLUMNS = [
    "iter",
    "f",
    "gradnorm",
    "alpha",
    "grad_evals",
    "value_evals",
    "cum_seconds",
]

Termination = Literal["budget", "gradient_tolerance", "stationary", "stalled"]


@dataclass(frozen=True, eq=False)
class TraceStep:
    iteration: int
    query: Vector
    answer: Vector
    value: float
    gradient_norm: float
    alpha: float
    gradient_evaluations: int
    value_evaluations: int
    seconds: float


@dataclass
class RunTrace:
    method: str
    politician: str
    steps: list[TraceStep] = field(default_factory=list)
    termination: Termination = "budget"
    events: list[RunEvent] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def values(self) -> np.ndarray:
        return np.array([step.value for step in self.steps])

    @property
    def final(self) -> TraceStep:
        return self.steps[-1]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "iter": [step.iteration for step in self.steps],
                "f": [step.value for step in self.steps],
                "gradnorm": [step.gradient_norm for step in self.steps],
                "alpha": [step.alpha for step in self.steps],
                "grad_evals": [step.gradient_evaluations for step in self.steps],
                "value_evals": [step.value_evaluations for step in self.steps],
                "cum_seconds": [step.seconds for step in self.steps],
            },
            columns=TRACE_COLUMNS,
        )


def _current_alpha(method: FirstOrderMethod, politician: Politician) -> float:
    alpha = politician.alpha
    if alpha is None:
        alpha = method.alpha
    return np.nan if alpha is None else float(alpha)


def run(
    method: FirstOrderMethod,
    politician: Politician,
    objective: Objective,
    x0: Vector,
    budget: int,
    tol: float = 0.0,
) -> RunTrace:
    """Alternate method query, politician answer and history update.

    Stops after `budget` answers, when the gradient norm of an answer drops to
    `tol`, when the method reports exact stationarity, or when the best value
    has not improved for several consecutive iterations.
    """
    if budget < 1:
        raise ConfigError(f"Budget must be at least 1, got {budget}")
    x0 = np.array(x0, dtype=np.float64, copy=True)
    if x0.shape != (objective.dimension,) or not np.all(np.isfinite(x0)):
        raise EvaluationError("Starting point must be finite and of the objective's dimension", x0)

    oracle = Oracle(objective)
    history = History()
    method.reset(x0, uses_oracle=isinstance(politician, OraclePolitician))
    politician.reset(objective.dimension)
    trace = RunTrace(method=method.name, politician=politician.name, events=oracle.events)

    logger.info(f"Starting {method.name} with politician '{politician.name}' (n={objective.dimension}, budget={budget})")
    started = time.perf_counter()
    query = method.initial_query()
    stalled = 0

    for iteration in range(1, budget + 1):
        oracle.iteration = iteration
        record = politician.answer(query, history, oracle)

        # f(answer) <= f(query), up to rounding of line searches
        if np.array_equal(record.point, query):
            query_value = record.value
        else:
            query_value = oracle.value(query)
        if record.value > query_value + CONTRACT_SLACK * (1.0 + abs(query_value)):
            raise PoliticianContractError(
                politician=politician.name,
                iteration=iteration,
                query_value=query_value,
                answer_value=record.value,
            )
        oracle.forget(keep=record)

        previous_best = history.fval if len(history) else np.inf
        history.append(record)
        trace.steps.append(
            TraceStep(
                iteration=iteration,
                query=np.array(query, copy=True),
                answer=record.point,
                value=record.value,
                gradient_norm=record.gradient_norm,
                alpha=_current_alpha(method, politician),
                gradient_evaluations=oracle.gradient_evaluations,
                value_evaluations=oracle.value_evaluations,
                seconds=time.perf_counter() - started,
            )
        )
        logger.debug(f"[{iteration}] f={record.value:.12e} |g|={record.gradient_norm:.3e}")

        if record.gradient_norm == 0.0:
            trace.termination = "stationary"
            break
        if record.gradient_norm <= tol:
            trace.termination = "gradient_tolerance"
            break

        best = history.fval
        if previous_best - best < STALL_TOLERANCE * (1.0 + abs(best)):
            stalled += 1
        else:
            stalled = 0
        if stalled >= STALL_WINDOW:
            trace.termination = "stalled"
            break
        if iteration == budget:
            trace.termination = "budget"
            break

        query = method.next_query(history, oracle)
        if query is None:
            trace.termination = "stationary"
            break

    logger.info(
        f"Finished {method.name}/{politician.name}: {trace.termination} after {len(trace)} iterations, "
        f"f={trace.final.value:.6e}"
    )
    return trace
