from dataclasses import dataclass
from politician.engine.records import FirstOrderRecord, History, Objective, Vector
from politician.errors import EvaluationError
from politician.log import get_logger

import numpy as np


logger = get_logger("engine.oracle")


@dataclass(frozen=True)
class RunEvent:
    iteration: int
    kind: str
    detail: str


class Oracle:
    """Per-run access to an objective.

    Charges one gradient evaluation per `first_order` call and counts value-only
    evaluations separately. Values seen during the current iteration are memoised, so
    re-reading the value of a point the line search already sampled is free.
    Methods and politicians note recoverable conditions in `events`.
    """

    objective: Objective
    gradient_evaluations: int
    value_evaluations: int
    iteration: int
    events: list[RunEvent]

    def __init__(self, objective: Objective):
        self.objective = objective
        self.gradient_evaluations = 0
        self.value_evaluations = 0
        self.iteration = 0
        self.events = []
        self._values: dict[bytes, float] = {}

    @property
    def dimension(self) -> int:
        return self.objective.dimension

    def first_order(self, x: Vector) -> FirstOrderRecord:
        point = np.array(x, dtype=np.float64, copy=True)
        if point.shape != (self.dimension,):
            raise EvaluationError(
                f"Expected a point of dimension {self.dimension}, got shape {point.shape}",
                point,
            )
        if not np.all(np.isfinite(point)):
            raise EvaluationError("Query point is not finite", point)

        value, gradient = self.objective.evaluate(point)
        self.gradient_evaluations += 1
        record = FirstOrderRecord(
            point=point,
            value=float(value),
            gradient=np.array(gradient, dtype=np.float64, copy=True),
        )
        self._values[point.tobytes()] = record.value
        return record

    def value(self, x: Vector) -> float:
        point = np.asarray(x, dtype=np.float64)
        key = point.tobytes()
        if key in self._values:
            return self._values[key]

        value = float(self.objective.value(point))
        self.value_evaluations += 1
        # line searches compare values, so treat overflow like +inf
        if not np.isfinite(value):
            value = np.inf
        self._values[key] = value
        return value

    def forget(self, keep: FirstOrderRecord | None = None):
        """Drop memoised values, optionally keeping the value of one record."""
        self._values.clear()
        if keep is not None:
            self._values[keep.point.tobytes()] = keep.value

    def note(self, kind: str, detail: str = ""):
        self.events.append(RunEvent(iteration=self.iteration, kind=kind, detail=detail))


class OraclePolitician:
    """The trivial politician: answers exactly the queried point."""

    name: str = "oracle"

    def reset(self, dimension: int):
        pass

    @property
    def alpha(self) -> float | None:
        return None

    def answer(self, x: Vector, history: History, oracle: Oracle) -> FirstOrderRecord:
        return oracle.first_order(x)


def oracle_politician(x: Vector, history: History, objective: Objective) -> FirstOrderRecord:
    """Answer `x` with its own first-order information."""
    return OraclePolitician().answer(x, history, Oracle(objective))
