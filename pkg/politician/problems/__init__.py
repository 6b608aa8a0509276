from typing import Protocol
from politician.engine.records import Vector
from politician.problems.hinge import HingeRegressionProblem, hinge_eval, phi, phi_prime
from politician.problems.libsvm import (
    SparseDataset,
    SparseRow,
    load_libsvm,
    parse_libsvm,
    serialize_libsvm,
    synthetic_dataset,
)
from politician.problems.nesterov_variant import NesterovVariantProblem, nesterov_variant_eval
from politician.problems.quadratic import QuadraticProblem, quadratic_eval


class Problem(Protocol):
    """An objective with the metadata the bench needs."""

    name: str

    @property
    def dimension(self) -> int: ...

    @property
    def f_star(self) -> float | None: ...

    def x0(self) -> Vector: ...

    def value(self, x: Vector) -> float: ...

    def evaluate(self, x: Vector) -> tuple[float, Vector]: ...


__all__ = [
    "HingeRegressionProblem",
    "NesterovVariantProblem",
    "Problem",
    "QuadraticProblem",
    "SparseDataset",
    "SparseRow",
    "hinge_eval",
    "load_libsvm",
    "nesterov_variant_eval",
    "parse_libsvm",
    "phi",
    "phi_prime",
    "quadratic_eval",
    "serialize_libsvm",
    "synthetic_dataset",
]
