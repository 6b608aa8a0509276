from typing import Callable
from politician.engine.oracle import Oracle
from politician.engine.records import History, Vector
from politician.methods.line_search import exact_line_search

import numpy as np


def sd_query(history: History, value: Callable[[Vector], float]) -> Vector | None:
    """Exact line search from the last answer along its negative gradient."""
    record = history.last
    if record.gradient_norm == 0.0:
        return None
    return exact_line_search(value, record.point, record.point - record.gradient).point


class SteepestDescent:
    name: str = "sd"

    def __init__(self):
        self.x0: Vector | None = None

    def reset(self, x0: Vector, uses_oracle: bool):
        self.x0 = np.array(x0, dtype=np.float64, copy=True)

    @property
    def alpha(self) -> float | None:
        return None

    def initial_query(self) -> Vector:
        return self.x0.copy()

    def next_query(self, history: History, oracle: Oracle) -> Vector | None:
        return sd_query(history, oracle.value)
