from dataclasses import dataclass, field
from politician.engine.records import Vector
from politician.errors import ConfigError

import numpy as np


@dataclass(frozen=True, eq=False)
class QuadraticProblem:
    """f(x) = (x - c)^T D (x - c) with D diagonal."""

    D: Vector
    c: Vector
    seed: int | None = None
    name: str = field(default="quadratic")

    @classmethod
    def random(cls, n: int, seed: int, kappa: float | None = None) -> "QuadraticProblem":
        """D uniform on [0, 1] (or [1/kappa, 1] when kappa is given), c standard normal."""
        if n < 1:
            raise ConfigError(f"Quadratic dimension must be positive, got {n}")
        rng = np.random.default_rng(seed)
        D = rng.uniform(0.0, 1.0, size=n)
        if kappa is not None:
            if kappa < 1.0:
                raise ConfigError(f"kappa must be at least 1, got {kappa}")
            D = 1.0 / kappa + (1.0 - 1.0 / kappa) * D
        c = rng.standard_normal(n)
        return cls(D=D, c=c, seed=seed)

    @property
    def dimension(self) -> int:
        return self.D.size

    @property
    def strong_convexity(self) -> float:
        return 2.0 * float(self.D.min())

    @property
    def smoothness(self) -> float:
        return 2.0 * float(self.D.max())

    @property
    def condition_number(self) -> float:
        positive = self.D[self.D > 0.0]
        return float(self.D.max() / positive.min()) if positive.size else np.inf

    @property
    def f_star(self) -> float:
        return 0.0

    @property
    def x_star(self) -> Vector:
        return self.c.copy()

    def x0(self) -> Vector:
        return np.zeros(self.dimension)

    def value(self, x: Vector) -> float:
        r = x - self.c
        return float(r @ (self.D * r))

    def evaluate(self, x: Vector) -> tuple[float, Vector]:
        r = x - self.c
        Dr = self.D * r
        return float(r @ Dr), 2.0 * Dr

    def sublevel_radius(self, x0: Vector) -> float:
        """max ||x - c|| over {f(x) <= f(x0)}, attained along the flattest axis."""
        return float(np.sqrt(self.value(x0) / self.D.min()))


def quadratic_eval(problem: QuadraticProblem, x: Vector) -> tuple[float, Vector]:
    return problem.evaluate(np.asarray(x, dtype=np.float64))
