from dataclasses import dataclass, field
from politician.engine.oracle import Oracle
from politician.engine.records import FirstOrderRecord, History, Vector
from politician.log import get_logger
from politician.methods.line_search import exact_line_search

import numpy as np


logger = get_logger("methods.bfgs")

CURVATURE_TOLERANCE = 1e-14


@dataclass
class BFGSMemory:
    """Curvature pairs (s_i, y_i) between consecutive answers."""

    steps: list[Vector] = field(default_factory=list)
    changes: list[Vector] = field(default_factory=list)
    rejected: int = 0

    def __len__(self) -> int:
        return len(self.steps)

    def update(self, previous: FirstOrderRecord, current: FirstOrderRecord) -> bool:
        s = current.point - previous.point
        y = current.gradient - previous.gradient
        curvature = float(s @ y)
        if curvature <= CURVATURE_TOLERANCE * float(np.linalg.norm(s) * np.linalg.norm(y)) or curvature <= 0.0:
            self.rejected += 1
            return False
        self.steps.append(s)
        self.changes.append(y)
        return True


def two_loop_direction(gradient: Vector, memory: BFGSMemory) -> Vector:
    """-H g for the BFGS inverse Hessian built from every stored pair."""
    p = -np.asarray(gradient, dtype=np.float64)
    if not memory.steps:
        return p

    rhos = [1.0 / float(s @ y) for s, y in zip(memory.steps, memory.changes)]
    coefficients = []
    for s, y, rho in zip(reversed(memory.steps), reversed(memory.changes), reversed(rhos)):
        a = rho * float(s @ p)
        p -= a * y
        coefficients.append(a)
    coefficients.reverse()

    s, y = memory.steps[-1], memory.changes[-1]
    p *= float(s @ y) / float(y @ y)

    for s, y, rho, a in zip(memory.steps, memory.changes, rhos, coefficients):
        b = rho * float(y @ p)
        p += (a - b) * s
    return p


def bfgs_query(history: History, memory: BFGSMemory, oracle: Oracle) -> Vector | None:
    record = history.last
    if record.gradient_norm == 0.0:
        return None
    if len(history) >= 2:
        memory.update(history[-2], record)

    direction = two_loop_direction(record.gradient, memory)
    if float(record.gradient @ direction) >= 0.0:
        oracle.note("bfgs_reset", "two-loop direction was not a descent direction")
        logger.debug("BFGS direction is not a descent direction; using -g")
        direction = -record.gradient
    return exact_line_search(oracle.value, record.point, record.point + direction).point


class BFGS:
    name: str = "bfgs"

    def __init__(self):
        self.x0: Vector | None = None
        self.memory = BFGSMemory()

    def reset(self, x0: Vector, uses_oracle: bool):
        self.x0 = np.array(x0, dtype=np.float64, copy=True)
        self.memory = BFGSMemory()

    @property
    def alpha(self) -> float | None:
        return None

    def initial_query(self) -> Vector:
        return self.x0.copy()

    def next_query(self, history: History, oracle: Oracle) -> Vector | None:
        return bfgs_query(history, self.memory, oracle)
