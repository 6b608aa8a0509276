from dataclasses import dataclass, field
from typing import Callable, Iterator, Protocol, TypeAlias
from numpy.typing import NDArray
from politician.errors import EvaluationError

import numpy as np


Vector: TypeAlias = NDArray[np.float64]
Matrix: TypeAlias = NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class FirstOrderRecord:
    """A query point with its function value and gradient."""

    point: Vector
    value: float
    gradient: Vector

    def __post_init__(self):
        if self.point.shape != self.gradient.shape:
            raise EvaluationError(
                f"Gradient shape {self.gradient.shape} does not match point shape {self.point.shape}",
                self.point,
            )
        if not np.isfinite(self.value) or not np.all(np.isfinite(self.gradient)):
            raise EvaluationError(
                f"Non-finite first-order information (value={self.value!r})",
                self.point,
            )

    @property
    def gradient_norm(self) -> float:
        return float(np.linalg.norm(self.gradient))


class History:
    """Append-only sequence of first-order records."""

    records: list[FirstOrderRecord]

    def __init__(self, records: list[FirstOrderRecord] | None = None):
        self.records = list(records or [])

    def append(self, record: FirstOrderRecord) -> "History":
        self.records.append(record)
        return self

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[FirstOrderRecord]:
        return iter(self.records)

    def __getitem__(self, index: int) -> FirstOrderRecord:
        return self.records[index]

    @property
    def last(self) -> FirstOrderRecord:
        return self.records[-1]

    @property
    def best(self) -> FirstOrderRecord:
        # first record attaining the minimum, so ties resolve deterministically
        return min(self.records, key=lambda record: record.value)

    @property
    def fval(self) -> float:
        return min(record.value for record in self.records)


class Objective(Protocol):
    """A function f: R^n -> R with first-order information."""

    dimension: int

    def evaluate(self, x: Vector) -> tuple[float, Vector]:
        """Value and gradient at `x`."""
        ...

    def value(self, x: Vector) -> float:
        """Value only at `x` (used by line searches)."""
        ...


@dataclass(frozen=True)
class FunctionObjective:
    """Adapts plain callables to the Objective protocol."""

    dimension: int
    evaluator: Callable[[Vector], tuple[float, Vector]]
    value_fn: Callable[[Vector], float] | None = field(default=None)

    def evaluate(self, x: Vector) -> tuple[float, Vector]:
        value, gradient = self.evaluator(x)
        return float(value), np.asarray(gradient, dtype=np.float64)

    def value(self, x: Vector) -> float:
        if self.value_fn is not None:
            return float(self.value_fn(x))
        return self.evaluate(x)[0]
