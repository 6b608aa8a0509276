"""
Incremental orthonormal basis of the affine span explored by a run.

Politician geometry runs in the coordinates u of x = base + Q u, where the
columns of Q span {y_i - y_1} and {g_i}. Appending a vector costs O(n m).
"""

from politician.engine.records import Matrix, Vector
from politician.errors import SubspaceError

import numpy as np


DEPENDENCE_TOLERANCE = 1e-12
ORTHOGONALITY_TOLERANCE = 1e-10
SPAN_TOLERANCE = 1e-8


class SubspaceBasis:
    """Base point plus an orthonormal basis grown by Gram-Schmidt."""

    dimension: int
    base: Vector | None
    m: int
    dependent: int

    def __init__(self, dimension: int, capacity: int = 8):
        self.dimension = dimension
        self.base = None
        self.m = 0
        self.dependent = 0
        self._columns = np.zeros((dimension, min(max(capacity, 1), dimension)))
        self._coordinates: list[Vector] = []

    @classmethod
    def full(cls, dimension: int, base: Vector) -> "SubspaceBasis":
        """Identity basis of the whole space anchored at `base`."""
        basis = cls(dimension, capacity=dimension)
        basis.set_base(base)
        basis._columns[:, :] = np.eye(dimension)
        basis.m = dimension
        return basis

    @property
    def Q(self) -> Matrix:
        return self._columns[:, : self.m]

    @property
    def R(self) -> Matrix:
        """Coordinates of every inserted vector, one column each (zero padded)."""
        R = np.zeros((self.m, len(self._coordinates)))
        for j, column in enumerate(self._coordinates):
            R[: column.size, j] = column
        return R

    def set_base(self, base: Vector) -> "SubspaceBasis":
        self.base = np.array(base, dtype=np.float64, copy=True)
        return self

    def _grow(self):
        capacity = self._columns.shape[1]
        if self.m < capacity:
            return
        grown = np.zeros((self.dimension, min(2 * capacity, self.dimension)))
        grown[:, :capacity] = self._columns
        self._columns = grown

    def insert(self, v: Vector) -> bool:
        """Append `v` to the span; returns False when `v` is already in it."""
        v = np.asarray(v, dtype=np.float64)
        norm = float(np.linalg.norm(v))
        if self.m == self.dimension:
            self.dependent += 1
            self._coordinates.append(self.Q.T @ v)
            return False

        Q = self.Q
        # classical Gram-Schmidt, twice
        h = Q.T @ v
        w = v - Q @ h
        correction = Q.T @ w
        w -= Q @ correction
        h += correction
        residual = float(np.linalg.norm(w))

        if residual <= DEPENDENCE_TOLERANCE * norm or residual == 0.0:
            self.dependent += 1
            self._coordinates.append(h)
            return False

        q = w / residual
        overlap = Q.T @ q
        if overlap.size and np.max(np.abs(overlap)) > ORTHOGONALITY_TOLERANCE:
            q -= Q @ overlap
            q /= np.linalg.norm(q)

        self._grow()
        self._columns[:, self.m] = q
        self.m += 1
        self._coordinates.append(np.append(h, residual))
        return True

    def orthogonality_error(self) -> float:
        Q = self.Q
        return float(np.max(np.abs(Q.T @ Q - np.eye(self.m)))) if self.m else 0.0

    def coordinates(self, v: Vector) -> Vector:
        """Coordinates of a direction vector in the basis."""
        v = np.asarray(v, dtype=np.float64)
        u = self.Q.T @ v
        residual = float(np.linalg.norm(v - self.Q @ u))
        if residual > SPAN_TOLERANCE * (1.0 + float(np.linalg.norm(v))):
            raise SubspaceError(
                f"Vector is not in the span of the basis (residual {residual:.3e})",
                residual,
            )
        return u

    def reduce(self, x: Vector) -> Vector:
        """Coordinates Q^T (x - base) of a point of the affine span."""
        if self.base is None:
            raise SubspaceError("Basis has no base point yet", np.inf)
        x = np.asarray(x, dtype=np.float64)
        shifted = x - self.base
        u = self.Q.T @ shifted
        residual = float(np.linalg.norm(shifted - self.Q @ u))
        if residual > SPAN_TOLERANCE * (1.0 + float(np.linalg.norm(x))):
            raise SubspaceError(
                f"Point is not in the affine span of the basis (residual {residual:.3e})",
                residual,
            )
        return u

    def lift(self, u: Vector) -> Vector:
        if self.base is None:
            raise SubspaceError("Basis has no base point yet", np.inf)
        return self.base + self.Q @ np.asarray(u, dtype=np.float64)
