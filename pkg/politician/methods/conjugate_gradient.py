from dataclasses import dataclass
from politician.engine.oracle import Oracle
from politician.engine.records import History, Vector
from politician.log import get_logger
from politician.methods.line_search import exact_line_search

import numpy as np


logger = get_logger("methods.cg")


@dataclass
class CGState:
    gradient: Vector | None = None
    direction: Vector | None = None
    restarts: int = 0


def cg_direction(gradient: Vector, state: CGState) -> tuple[Vector, bool]:
    """Polak-Ribiere+ direction; falls back to -gradient when it is not a descent direction."""
    if state.gradient is None or state.direction is None:
        return -gradient, False
    previous = state.gradient
    beta = max(0.0, float(gradient @ (gradient - previous)) / float(previous @ previous))
    direction = -gradient + beta * state.direction
    if float(gradient @ direction) >= 0.0:
        return -gradient, True
    return direction, False


def cg_query(history: History, state: CGState, oracle: Oracle) -> Vector | None:
    record = history.last
    if record.gradient_norm == 0.0:
        return None
    direction, restarted = cg_direction(record.gradient, state)
    if restarted:
        state.restarts += 1
        oracle.note("cg_restart", "Polak-Ribiere+ direction was not a descent direction")
        logger.debug("CG restart")
    state.gradient = record.gradient.copy()
    state.direction = direction
    return exact_line_search(oracle.value, record.point, record.point + direction).point


class ConjugateGradient:
    name: str = "cg"

    def __init__(self):
        self.x0: Vector | None = None
        self.state = CGState()

    def reset(self, x0: Vector, uses_oracle: bool):
        self.x0 = np.array(x0, dtype=np.float64, copy=True)
        self.state = CGState()

    @property
    def alpha(self) -> float | None:
        return None

    def initial_query(self) -> Vector:
        return self.x0.copy()

    def next_query(self, history: History, oracle: Oracle) -> Vector | None:
        return cg_query(history, self.state, oracle)
