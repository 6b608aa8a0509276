from dataclasses import dataclass, field
from scipy import sparse
from politician.engine.records import Vector
from politician.errors import ConfigError
from politician.problems.libsvm import SparseDataset

import numpy as np


def phi(z: Vector, t: float) -> Vector:
    """Smoothed hinge loss: 0 below -1, (z+1)^2/(2t) up to -1+t, then z + 1 - t/2."""
    z = np.asarray(z, dtype=np.float64)
    return np.where(
        z <= -1.0,
        0.0,
        np.where(z >= -1.0 + t, z + 1.0 - 0.5 * t, (z + 1.0) ** 2 / (2.0 * t)),
    )


def phi_prime(z: Vector, t: float) -> Vector:
    return np.clip((np.asarray(z, dtype=np.float64) + 1.0) / t, 0.0, 1.0)


@dataclass(frozen=True, eq=False)
class HingeRegressionProblem:
    """f(x) = (1/n) sum_i phi_t(b_i a_i^T x) + (lambda/2)||x||^2."""

    features: sparse.csr_matrix
    labels: Vector
    t: float = 1.0
    lam: float = 1e-4
    name: str = field(default="hinge")

    def __post_init__(self):
        if self.t <= 0.0:
            raise ConfigError(f"Smoothness parameter t must be positive, got {self.t}")
        if self.lam < 0.0:
            raise ConfigError(f"Regularization must be nonnegative, got {self.lam}")
        if self.features.shape[0] != self.labels.size:
            raise ConfigError("Feature rows and labels differ in number")

    @classmethod
    def from_dataset(cls, dataset: SparseDataset, t: float = 1.0, lam: float = 1e-4) -> "HingeRegressionProblem":
        if len(dataset) == 0:
            raise ConfigError("Hinge regression needs at least one sample")
        return cls(features=dataset.to_matrix(), labels=dataset.labels, t=t, lam=lam)

    @property
    def dimension(self) -> int:
        return self.features.shape[1]

    @property
    def strong_convexity(self) -> float:
        return self.lam

    @property
    def f_star(self) -> float | None:
        return None

    @property
    def x_star(self) -> Vector | None:
        return None

    def x0(self) -> Vector:
        return np.zeros(self.dimension)

    def _margins(self, x: Vector) -> Vector:
        return self.labels * (self.features @ x)

    def value(self, x: Vector) -> float:
        return float(np.mean(phi(self._margins(x), self.t)) + 0.5 * self.lam * (x @ x))

    def evaluate(self, x: Vector) -> tuple[float, Vector]:
        margins = self._margins(x)
        value = float(np.mean(phi(margins, self.t)) + 0.5 * self.lam * (x @ x))
        weights = self.labels * phi_prime(margins, self.t) / self.labels.size
        return value, self.features.T @ weights + self.lam * x


def hinge_eval(problem: HingeRegressionProblem, x: Vector) -> tuple[float, Vector]:
    return problem.evaluate(np.asarray(x, dtype=np.float64))
