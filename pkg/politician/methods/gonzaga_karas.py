"""
Accelerated gradient descent that learns its strong convexity estimate by line search.

Each iteration takes the answer y_k, line searches along -grad f(y_k) to get
x_{k+1}, adapts the estimate alpha, solves a scalar quadratic for the momentum
weight beta and moves the momentum point v. The next query is the best point
on the segment [x_{k+1}, v_{k+1}].

The safeguard "alpha >= gamma/1.02 => alpha = gamma/2" only holds its promise
with exact first-order answers, so it is applied in oracle mode only.
"""

from dataclasses import dataclass
from politician.engine.oracle import Oracle
from politician.engine.records import FirstOrderRecord, History, Vector
from politician.log import get_logger
from politician.methods.line_search import exact_line_search

import numpy as np


logger = get_logger("methods.gk")

INITIAL_ALPHA_DIVISOR = 20.0
SAFEGUARD_RATIO = 1.02


@dataclass
class GKState:
    gamma: float
    alpha_est: float
    v: Vector
    x: Vector
    f_x: float
    oracle_mode: bool
    beta: float | None = None
    safeguard_applications: int = 0
    discriminant_clamps: int = 0


def initial_state(record: FirstOrderRecord, x_next: Vector, f_next: float, oracle_mode: bool) -> GKState:
    """Seeds alpha from the first line search, with gamma = 2 alpha and v = x = y_0."""
    decrease = record.value - f_next
    alpha = (
        float(record.gradient @ record.gradient) / (INITIAL_ALPHA_DIVISOR * decrease)
        if decrease > 0.0
        else 1.0
    )
    return GKState(
        gamma=2.0 * alpha,
        alpha_est=alpha,
        v=record.point.copy(),
        x=record.point.copy(),
        f_x=record.value,
        oracle_mode=oracle_mode,
    )


def momentum_weight(A: float, B: float, C: float, state: GKState, oracle: Oracle | None = None) -> float:
    """Root of A beta^2 + B beta + C = 0 in [0, 1]."""
    if abs(A) <= 1e-300 or abs(A) <= 1e-14 * (abs(B) + abs(C)):
        beta = -C / B if B != 0.0 else 1.0
    else:
        discriminant = B * B - 4.0 * A * C
        if discriminant < 0.0:
            state.discriminant_clamps += 1
            logger.warning(f"GK discriminant {discriminant:.3e} < 0, clamped to 0")
            if oracle is not None:
                oracle.note("gk_discriminant_clamp", f"B^2-4AC={discriminant:.3e}")
            discriminant = 0.0
        beta = (-B + np.sqrt(discriminant)) / (2.0 * A)
    return float(np.clip(beta, 0.0, 1.0))


def gk_step(
    state: GKState,
    record: FirstOrderRecord,
    x_next: Vector,
    f_next: float,
    oracle: Oracle | None = None,
) -> GKState:
    """One loop body given the answer y_k and the line search result x_{k+1}."""
    y, g, f_y = record.point, record.gradient, record.value
    gamma, alpha = state.gamma, state.alpha_est
    squared_norm = float(g @ g)

    if state.oracle_mode and alpha >= gamma / SAFEGUARD_RATIO:
        alpha = gamma / 2.0
        state.safeguard_applications += 1

    decrease = f_y - f_next
    if decrease > 0.0 and alpha >= squared_norm / (2.0 * decrease):
        alpha = squared_norm / (INITIAL_ALPHA_DIVISOR * decrease)

    offset = state.v - y
    G = gamma * (0.5 * alpha * float(offset @ offset) + float(g @ offset))
    A = G + 0.5 * squared_norm + (alpha - gamma) * (state.f_x - f_y)
    B = (alpha - gamma) * (f_next - state.f_x) - gamma * (f_y - state.f_x) - G
    C = gamma * (f_next - state.f_x)
    beta = momentum_weight(A, B, C, state, oracle)

    new_gamma = (1.0 - beta) * gamma + beta * alpha
    state.v = ((1.0 - beta) * gamma * state.v + beta * (alpha * y - g)) / new_gamma
    state.beta = beta
    state.gamma = new_gamma
    state.alpha_est = alpha
    state.x = np.array(x_next, copy=True)
    state.f_x = f_next
    return state


class GonzagaKaras:
    name: str = "gk"

    def __init__(self):
        self.x0: Vector | None = None
        self.oracle_mode = True
        self.state: GKState | None = None

    def reset(self, x0: Vector, uses_oracle: bool):
        self.x0 = np.array(x0, dtype=np.float64, copy=True)
        self.oracle_mode = uses_oracle
        self.state = None

    @property
    def alpha(self) -> float | None:
        return None if self.state is None else self.state.alpha_est

    def initial_query(self) -> Vector:
        return self.x0.copy()

    def next_query(self, history: History, oracle: Oracle) -> Vector | None:
        record = history.last
        if record.gradient_norm == 0.0:
            return None

        search = exact_line_search(oracle.value, record.point, record.point - record.gradient)
        if self.state is None:
            self.state = initial_state(record, search.point, search.value, self.oracle_mode)
        gk_step(self.state, record, search.point, search.value, oracle)

        return exact_line_search(oracle.value, self.state.x, self.state.v, segment=True).point
