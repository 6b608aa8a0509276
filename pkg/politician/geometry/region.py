"""
Lower-bound balls derived from strong convexity and their intersection.

Every record (y, f(y), g) and an estimate alpha of the strong convexity give a
ball that must contain the minimizer:

    B(y, alpha, fval) = { z : ||z - (y - g/alpha)||^2 <= ||g||^2/alpha^2 - (2/alpha)(f(y) - fval) }

or, multiplying out, h(z) = f(y) - fval + <g, z - y> + (alpha/2)||z - y||^2 <= 0.
Feasibility questions are answered on the h form, relative to the best point,
which keeps the arithmetic well scaled late in a run.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence
from politician.engine.records import FirstOrderRecord, Matrix, Vector
from politician.errors import RegionError
from politician.geometry.subspace import SubspaceBasis
from politician.log import get_logger

import numpy as np


logger = get_logger("geometry.region")

GAP_TOLERANCE = 1e-9
ROUNDING_TOLERANCE = 64.0 * np.finfo(np.float64).eps
MAX_FRANK_WOLFE_ITERATIONS = 5000
BISECTION_WIDTH = 1.01
MAX_EXPANSIONS = 200
# halving gives up this far below the first upper bound
MIN_ALPHA_RATIO = 1e-30


@dataclass(frozen=True, eq=False)
class Ball:
    center: Vector
    radius_sq: float

    def contains(self, z: Vector, tol: float = 0.0) -> bool:
        return float(np.sum((np.asarray(z) - self.center) ** 2)) <= self.radius_sq + tol


@dataclass(frozen=True, eq=False)
class Observations:
    """Points, values and gradients of a history in one coordinate system."""

    points: Matrix
    values: Vector
    gradients: Matrix

    @classmethod
    def from_records(
        cls,
        records: Sequence[FirstOrderRecord],
        basis: SubspaceBasis | None = None,
    ) -> "Observations":
        if len(records) == 0:
            raise RegionError("A region needs at least one record")
        if basis is None:
            points = np.array([record.point for record in records])
            gradients = np.array([record.gradient for record in records])
        else:
            points = np.array([basis.reduce(record.point) for record in records])
            gradients = np.array([basis.coordinates(record.gradient) for record in records])
        values = np.array([record.value for record in records])
        return cls(points=points, values=values, gradients=gradients)

    def __len__(self) -> int:
        return self.values.size

    @property
    def dimension(self) -> int:
        return self.points.shape[1]

    @property
    def best_index(self) -> int:
        return int(np.argmin(self.values))

    @property
    def fval(self) -> float:
        return float(self.values.min())

    def constraint_values(self, z: Vector, alpha: float, fval: float) -> Vector:
        """h_i(z) for every record; z is in ball i iff h_i(z) <= 0."""
        offsets = np.asarray(z) - self.points
        return (
            self.values
            - fval
            + np.einsum("ij,ij->i", self.gradients, offsets)
            + 0.5 * alpha * np.einsum("ij,ij->i", offsets, offsets)
        )


@dataclass(frozen=True, eq=False)
class BallRegion:
    balls: tuple[Ball, ...]
    alpha: float
    fval: float

    def __len__(self) -> int:
        return len(self.balls)

    @cached_property
    def centers(self) -> Matrix:
        return np.array([ball.center for ball in self.balls])

    @cached_property
    def radius_sq(self) -> Vector:
        return np.array([ball.radius_sq for ball in self.balls])

    @property
    def dimension(self) -> int:
        return self.centers.shape[1]

    def slacks(self, z: Vector) -> Vector:
        return self.radius_sq - np.sum((np.asarray(z) - self.centers) ** 2, axis=1)

    def contains(self, z: Vector, tol: float = 0.0) -> bool:
        return bool(np.all(self.slacks(z) >= -tol))

    def interior_margin(self) -> tuple[float, Vector]:
        """min_z max_i (||z - c_i||^2 - r_i^2) and its minimizer."""
        origin = self.centers.mean(axis=0)
        shifted = self.centers - origin
        offsets = 0.5 * (np.sum(shifted**2, axis=1) - self.radius_sq)

        def constraints(z: Vector) -> Vector:
            return 0.5 * (np.sum((z - shifted) ** 2, axis=1) - self.radius_sq)

        margin, witness = _frank_wolfe(shifted, offsets, 1.0, constraints, certify_only=False)
        return 2.0 * margin, witness + origin


def ball_from_record(record: FirstOrderRecord, alpha: float, fval: float) -> Ball | None:
    """The ball of minimizer candidates implied by `record`, or None when it is empty."""
    gap = record.value - fval
    if np.isinf(alpha):
        if gap == 0.0:
            return Ball(center=np.array(record.point, copy=True), radius_sq=0.0)
        return None
    radius_sq = float(record.gradient @ record.gradient) / alpha**2 - 2.0 * gap / alpha
    if radius_sq < 0.0:
        return None
    return Ball(center=record.point - record.gradient / alpha, radius_sq=radius_sq)


def _frank_wolfe(
    centers: Matrix,
    offsets: Vector,
    alpha: float,
    constraints: Callable[[Vector], Vector],
    certify_only: bool,
) -> tuple[float, Vector]:
    """Solves min_z max_i h_i(z) with h_i(z) = (alpha/2)||z||^2 - alpha<c_i, z> + b_i.

    The dual is max over the simplex of D(lam) = sum_i lam_i h_i(z(lam)) with
    z(lam) = sum_i lam_i c_i. Frank-Wolfe with away steps and exact steps
    converges linearly on it. Returns the primal value max_i h_i(z) at the final
    z(lam) and z itself.

    With `certify_only`, runs until the sign of the optimum is known: primal <= 0
    proves a nonempty region, dual above rounding an empty one. When both bounds
    are within rounding of zero the region touches the boundary and 0.0 is returned.
    """
    k = offsets.size
    # vertex values D(e_i) = b_i - (alpha/2)||c_i||^2
    vertex_values = offsets - 0.5 * alpha * np.sum(centers**2, axis=1)
    start = int(np.argmax(vertex_values))
    weights = np.zeros(k)
    weights[start] = 1.0
    z = centers[start].copy()
    scale = float(np.max(np.abs(vertex_values))) + float(np.max(np.abs(constraints(z))))
    rounding = ROUNDING_TOLERANCE * scale

    primal = np.inf
    for _ in range(MAX_FRANK_WOLFE_ITERATIONS):
        h = constraints(z)
        primal = float(h.max())
        dual = float(weights @ h)
        gap = primal - dual
        if certify_only:
            if primal <= 0.0 or dual > rounding:
                break
            # both bounds within rounding of zero
            if gap <= rounding:
                logger.debug(f"Margin within rounding of zero: primal={primal:.3e} dual={dual:.3e}")
                return 0.0, z
        elif gap <= GAP_TOLERANCE * max(scale, abs(primal), abs(dual)):
            break
        if gap <= 0.0:
            break

        toward = int(np.argmax(h))
        active = np.flatnonzero(weights > 0.0)
        away = int(active[np.argmin(h[active])])
        toward_gap = h[toward] - dual
        away_gap = dual - h[away]

        if toward_gap >= away_gap:
            direction_z = centers[toward] - z
            slope = toward_gap
            step_max = 1.0
        else:
            direction_z = z - centers[away]
            slope = away_gap
            step_max = weights[away] / (1.0 - weights[away]) if weights[away] < 1.0 else np.inf

        curvature = alpha * float(direction_z @ direction_z)
        step = step_max if curvature == 0.0 else min(step_max, slope / curvature)
        if not np.isfinite(step):
            break

        if toward_gap >= away_gap:
            weights *= 1.0 - step
            weights[toward] += step
        else:
            weights *= 1.0 + step
            weights[away] -= step
            if step == step_max:
                weights[away] = 0.0
        z = z + step * direction_z
    else:
        if certify_only:
            logger.debug(f"Feasibility undecided after {MAX_FRANK_WOLFE_ITERATIONS} iterations (primal={primal:.3e})")
            if primal <= GAP_TOLERANCE * scale:
                return 0.0, z

    return primal, z


def feasibility_margin(
    observations: Observations | Sequence[FirstOrderRecord],
    alpha: float,
    fval: float | None = None,
    certify_only: bool = False,
) -> tuple[float, Vector]:
    """min_z max_i h_i(z) and the point attaining it.

    The margin is <= 0 exactly when the intersection of the balls is nonempty.
    """
    if not isinstance(observations, Observations):
        observations = Observations.from_records(observations)
    if fval is None:
        fval = observations.fval

    best = observations.best_index
    anchor = observations.points[best]

    if np.isinf(alpha):
        # limit balls are single points, present only where f(y) = fval
        on_level = observations.values == fval
        same_point = np.all(observations.points == anchor, axis=1)
        if np.all(on_level & same_point):
            return 0.0, anchor.copy()
        return np.inf, anchor.copy()

    deltas = observations.points - anchor
    shifted_centers = deltas - observations.gradients / alpha
    offsets = (
        observations.values
        - fval
        - np.einsum("ij,ij->i", observations.gradients, deltas)
        + 0.5 * alpha * np.einsum("ij,ij->i", deltas, deltas)
    )

    def constraints(z: Vector) -> Vector:
        return observations.constraint_values(z + anchor, alpha, fval)

    margin, z = _frank_wolfe(shifted_centers, offsets, alpha, constraints, certify_only)
    return margin, z + anchor


def _is_feasible(observations: Observations, alpha: float, fval: float) -> bool:
    margin, _ = feasibility_margin(observations, alpha, fval, certify_only=True)
    return margin <= 0.0


def largest_feasible_alpha(
    observations: Observations | Sequence[FirstOrderRecord],
    fval: float | None = None,
    alpha_hi: float = np.inf,
) -> float:
    """Largest alpha (within a factor 1.01, at most `alpha_hi`) whose region is nonempty."""
    if not isinstance(observations, Observations):
        observations = Observations.from_records(observations)
    if fval is None:
        fval = observations.fval

    hi = alpha_hi
    if np.isinf(hi):
        gaps = observations.values - fval
        positive = gaps > 0.0
        if np.any(positive):
            squared_norms = np.sum(observations.gradients[positive] ** 2, axis=1)
            # every ball is nonempty on its own only below this
            hi = float(np.min(squared_norms / (2.0 * gaps[positive])))
        if not np.isfinite(hi) or hi <= 0.0:
            hi = 1.0
        for _ in range(MAX_EXPANSIONS):
            if not _is_feasible(observations, hi, fval):
                break
            hi *= 4.0
        else:
            return hi

    if _is_feasible(observations, hi, fval):
        return hi

    floor = MIN_ALPHA_RATIO * hi
    lo = hi / 2.0
    while not _is_feasible(observations, lo, fval):
        hi = lo
        lo /= 2.0
        if lo < floor:
            raise RegionError(f"No strong convexity estimate above {floor:.3e} gives a nonempty region")

    while hi / lo > BISECTION_WIDTH:
        middle = np.sqrt(lo * hi)
        if _is_feasible(observations, middle, fval):
            lo = middle
        else:
            hi = middle
        logger.debug(f"alpha bisection: [{lo:.6e}, {hi:.6e}]")
    return lo


def build_region(
    observations: Observations | Sequence[FirstOrderRecord],
    alpha: float,
    fval: float | None = None,
    basis: SubspaceBasis | None = None,
) -> BallRegion:
    """The intersection of the balls of every record, in the coordinates of `observations`."""
    if not isinstance(observations, Observations):
        observations = Observations.from_records(observations, basis)
    if fval is None:
        fval = observations.fval

    balls = []
    for i in range(len(observations)):
        record = FirstOrderRecord(
            point=observations.points[i],
            value=float(observations.values[i]),
            gradient=observations.gradients[i],
        )
        ball = ball_from_record(record, alpha, fval)
        if ball is None:
            raise RegionError(f"Ball {i} is empty for alpha={alpha!r}; adapt alpha first")
        balls.append(ball)
    return BallRegion(balls=tuple(balls), alpha=alpha, fval=fval)
