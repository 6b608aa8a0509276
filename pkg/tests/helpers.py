from typing import Callable
from politician.engine.records import FunctionObjective, Vector
from politician.geometry.region import Ball, BallRegion
from politician.problems import QuadraticProblem

import numpy as np


def central_gradient(f: Callable[[Vector], float], x: Vector, step: float | None = None) -> Vector:
    x = np.asarray(x, dtype=np.float64)
    h = 1e-6 * (1.0 + np.linalg.norm(x)) if step is None else step
    gradient = np.empty_like(x)
    for j in range(x.size):
        e = np.zeros_like(x)
        e[j] = h
        gradient[j] = (f(x + e) - f(x - e)) / (2.0 * h)
    return gradient


def central_jacobian(g: Callable[[Vector], Vector], x: Vector, step: float) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    columns = []
    for j in range(x.size):
        e = np.zeros_like(x)
        e[j] = step
        columns.append((g(x + e) - g(x - e)) / (2.0 * step))
    return np.column_stack(columns)


def random_region(rng: np.random.Generator, m: int, k: int) -> tuple[BallRegion, Vector]:
    """A region of k balls in R^m with a known interior point well away from the boundary."""
    inside = rng.standard_normal(m)
    balls = []
    for _ in range(k):
        center = inside + rng.standard_normal(m)
        radius_sq = float(np.sum((inside - center) ** 2)) + rng.uniform(0.5, 2.0)
        balls.append(Ball(center=center, radius_sq=radius_sq))
    return BallRegion(balls=tuple(balls), alpha=1.0, fval=0.0), inside


def interior_points(rng: np.random.Generator, region: BallRegion, inside: Vector, count: int) -> list[Vector]:
    """Random points whose slacks are at least a tenth of those at `inside`."""
    floor = 0.1 * float(region.slacks(inside).min())
    points = []
    while len(points) < count:
        candidate = inside + 0.3 * rng.standard_normal(inside.size)
        if region.slacks(candidate).min() >= floor:
            points.append(candidate)
    return points


def quadratic_objective(problem: QuadraticProblem) -> FunctionObjective:
    return FunctionObjective(dimension=problem.dimension, evaluator=problem.evaluate, value_fn=problem.value)


