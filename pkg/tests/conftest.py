from politician.engine.records import FunctionObjective
from politician.problems import QuadraticProblem

import numpy as np
import pytest


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def square() -> FunctionObjective:
    """f(x) = x^2 in one dimension."""
    return FunctionObjective(dimension=1, evaluator=lambda x: (float(x @ x), 2.0 * x))


@pytest.fixture
def half_square() -> FunctionObjective:
    """f(x) = x^2 / 2 in one dimension."""
    return FunctionObjective(dimension=1, evaluator=lambda x: (0.5 * float(x @ x), x.copy()))


@pytest.fixture
def quadratic() -> QuadraticProblem:
    return QuadraticProblem.random(20, seed=3, kappa=50.0)
