"""
A smoothed variant of Nesterov's chain function

    f(x) = g(1 - x[0]) + sum_k g(x[k] - x[k+1])

where g vanishes on [-0.1, 0.1] and is a hyperbola-smoothed |z| - 0.1 outside.
Its minimizer (1, 0.9, ..., 0.1, 0, ..., 0) needs at least 11 first-order steps.
"""

from dataclasses import dataclass, field
from politician.engine.records import Vector
from politician.errors import ConfigError

import numpy as np


KNOT = 0.1
SMOOTHING = 0.001


def g(z: Vector) -> Vector:
    z = np.asarray(z, dtype=np.float64)
    excess = np.maximum(np.abs(z) - KNOT, 0.0)
    return np.where(excess > 0.0, np.sqrt(excess**2 + SMOOTHING**2) - SMOOTHING, 0.0)


def g_prime(z: Vector) -> Vector:
    z = np.asarray(z, dtype=np.float64)
    excess = np.maximum(np.abs(z) - KNOT, 0.0)
    return np.sign(z) * excess / np.sqrt(excess**2 + SMOOTHING**2)


@dataclass(frozen=True)
class NesterovVariantProblem:
    n: int
    name: str = field(default="nesterov")

    def __post_init__(self):
        if self.n < 1:
            raise ConfigError(f"Dimension must be positive, got {self.n}")

    @property
    def dimension(self) -> int:
        return self.n

    @property
    def f_star(self) -> float:
        return 0.0

    @property
    def x_star(self) -> Vector:
        return np.maximum(1.0 - KNOT * np.arange(self.n), 0.0)

    def x0(self) -> Vector:
        return np.zeros(self.n)

    def _links(self, x: Vector) -> Vector:
        return np.concatenate(([1.0 - x[0]], x[:-1] - x[1:]))

    def value(self, x: Vector) -> float:
        return float(np.sum(g(self._links(x))))

    def evaluate(self, x: Vector) -> tuple[float, Vector]:
        links = self._links(x)
        slopes = g_prime(links)
        gradient = np.zeros(self.n)
        gradient[0] -= slopes[0]
        gradient[:-1] += slopes[1:]
        gradient[1:] -= slopes[1:]
        return float(np.sum(g(links))), gradient


def nesterov_variant_eval(problem: NesterovVariantProblem, x: Vector) -> tuple[float, Vector]:
    return problem.evaluate(np.asarray(x, dtype=np.float64))
