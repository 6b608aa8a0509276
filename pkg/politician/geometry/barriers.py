"""
Analytic and volumetric barriers of an intersection of balls, and their centers.

For slacks s_i(x) = r_i^2 - ||x - c_i||^2 write d_i = 1/s_i and let A be the
k x m matrix with rows d_i (x - c_i). Then

    F(x)      = -1/2 sum_i log s_i(x)
    grad F(x) = A^T 1
    hess F(x) = H = 2 A^T A + lambda1 I,          lambda_p = sum_i d_i^p

and the volumetric barrier is v(x) = logdet H. When the region lives in an
m-dimensional subspace of R^n with all centers inside it, the R^n barrier
restricted to the subspace is logdet H + (n - m) log lambda1; `extra_dims`
carries that co-dimension.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Literal
from scipy.linalg import LinAlgError, cho_factor, cho_solve
from politician.engine.records import Matrix, Vector
from politician.errors import BarrierDomainError, CenteringError
from politician.geometry.region import BallRegion
from politician.log import get_logger

import numpy as np


logger = get_logger("geometry.barriers")

CenterKind = Literal["analytic", "volumetric"]

SLACK_FLOOR = 1e-14
DECREMENT_TOLERANCE = 1e-10
MAX_NEWTON_ITERATIONS = 50
MAX_BACKTRACKS = 60
ARMIJO = 1e-4
HESSIAN_CHECK_TOLERANCE = 1e-3
HESSIAN_CHECK_STEP = 1e-4
WARM_START_BISECTIONS = 40


def interior_slacks(region: BallRegion, x: Vector) -> Vector:
    slacks = region.slacks(x)
    floor = SLACK_FLOOR * float(np.max(region.radius_sq))
    violating = np.flatnonzero(slacks <= floor)
    if violating.size:
        i = int(violating[np.argmin(slacks[violating])])
        raise BarrierDomainError(i, float(slacks[i]))
    return slacks


class BarrierWorkspace:
    """Per-point quantities shared by the barrier values and derivatives."""

    def __init__(self, region: BallRegion, x: Vector):
        x = np.asarray(x, dtype=np.float64)
        slacks = interior_slacks(region, x)

        self.x = x
        self.m = x.size
        self.d: Vector = 1.0 / slacks
        self.slacks: Vector = slacks
        self.A: Matrix = self.d[:, None] * (x - region.centers)
        self.lambda1 = float(self.d.sum())
        self.lambda2 = float(self.d @ self.d)
        self.H: Matrix = 2.0 * self.A.T @ self.A + self.lambda1 * np.eye(self.m)
        self.factor = cho_factor(self.H)

    @cached_property
    def Hinv(self) -> Matrix:
        return cho_solve(self.factor, np.eye(self.m))

    @cached_property
    def W(self) -> Matrix:
        """A H^-1, row i is (H^-1 A_i)^T."""
        return self.A @ self.Hinv

    @cached_property
    def M(self) -> Matrix:
        return self.W @ self.A.T

    @cached_property
    def sigma(self) -> Vector:
        return np.einsum("ij,ij->i", self.W, self.A)

    @cached_property
    def tau(self) -> Vector:
        return np.einsum("ij,ij->i", self.W, self.W)

    @cached_property
    def u(self) -> Vector:
        return self.A.T @ self.d

    @cached_property
    def q(self) -> Vector:
        return self.Hinv @ self.u

    @property
    def trace_inv(self) -> float:
        return float(np.trace(self.Hinv))

    def logdet(self) -> float:
        c, _ = self.factor
        return 2.0 * float(np.sum(np.log(np.diag(c))))

    def u_jacobian(self) -> Matrix:
        return self.lambda2 * np.eye(self.m) + 4.0 * self.A.T @ (self.d[:, None] * self.A)


def analytic_value(region: BallRegion, x: Vector) -> float:
    return -0.5 * float(np.sum(np.log(interior_slacks(region, np.asarray(x, dtype=np.float64)))))


def analytic_grad_hess(region: BallRegion, x: Vector) -> tuple[Vector, Matrix]:
    work = BarrierWorkspace(region, x)
    return work.A.sum(axis=0), work.H


def volumetric_value(region: BallRegion, x: Vector, extra_dims: int = 0) -> float:
    work = BarrierWorkspace(region, x)
    value = work.logdet()
    if extra_dims:
        value += extra_dims * np.log(work.lambda1)
    return value


def _volumetric_grad(work: BarrierWorkspace, extra_dims: int) -> Vector:
    gradient = 2.0 * work.trace_inv * work.u + 4.0 * work.q + 8.0 * work.A.T @ work.sigma
    if extra_dims:
        gradient += 2.0 * extra_dims * work.u / work.lambda1
    return gradient


def volumetric_grad(region: BallRegion, x: Vector, extra_dims: int = 0) -> Vector:
    return _volumetric_grad(BarrierWorkspace(region, x), extra_dims)


def _volumetric_hess(work: BarrierWorkspace, extra_dims: int) -> Matrix:
    A, d, u, q, W = work.A, work.d, work.u, work.q, work.W
    Hinv, sigma, tau = work.Hinv, work.sigma, work.tau
    m = work.m
    eye = np.eye(m)
    p = A @ q
    Ju = work.u_jacobian()

    grad_trace = -(
        4.0 * Hinv @ q + 8.0 * A.T @ tau + 2.0 * float(np.sum(Hinv * Hinv)) * u
    )
    J_sigma = (
        4.0 * sigma[:, None] * A
        + 2.0 * d[:, None] * W
        - 8.0 * (work.M**2) @ A
        - 4.0 * p[:, None] * W
        - 2.0 * np.outer(tau, u)
    )
    J_q = Hinv @ (
        Ju
        - 8.0 * A.T @ (p[:, None] * A)
        - 2.0 * float(u @ q) * eye
        - 2.0 * np.outer(u, q)
        - 2.0 * np.outer(q, u)
    )

    hessian = (
        16.0 * A.T @ (sigma[:, None] * A)
        + 8.0 * float(d @ sigma) * eye
        + 8.0 * A.T @ J_sigma
        + 4.0 * J_q
        + 2.0 * np.outer(u, grad_trace)
        + 2.0 * work.trace_inv * Ju
    )
    if extra_dims:
        hessian += extra_dims * (
            2.0 * Ju / work.lambda1 - 4.0 * np.outer(u, u) / work.lambda1**2
        )
    return 0.5 * (hessian + hessian.T)


def volumetric_hess(region: BallRegion, x: Vector, extra_dims: int = 0) -> Matrix:
    return _volumetric_hess(BarrierWorkspace(region, x), extra_dims)


@dataclass
class CenterResult:
    center: Vector
    newton_iterations: int
    final_decrement: float
    kind: CenterKind
    converged: bool
    decrements: list[float] = field(default_factory=list)
    hessian_fallbacks: int = 0
    warm_started: bool = False


def _is_interior(region: BallRegion, x: Vector) -> bool:
    return bool(np.all(region.slacks(x) > SLACK_FLOOR * float(np.max(region.radius_sq))))


def _boundary_distance(region: BallRegion, x: Vector) -> float:
    distances = np.sqrt(region.radius_sq) - np.linalg.norm(x - region.centers, axis=1)
    return float(distances.min())


def _starting_point(region: BallRegion, warm: Vector | None) -> tuple[Vector, bool]:
    """The interior point Newton starts from, and whether the warm start shaped it."""
    if warm is not None:
        warm = np.asarray(warm, dtype=np.float64)
        if warm.shape == (region.dimension,) and _is_interior(region, warm):
            return warm.copy(), True

    margin, witness = region.interior_margin()
    if not margin < 0.0 or not _is_interior(region, witness):
        raise CenteringError(f"Region has no interior point (margin={margin!r})")
    if warm is None or warm.shape != (region.dimension,):
        return witness, False

    # farthest interior point toward the stale center, then halfway back
    lo, hi = 0.0, 1.0
    for _ in range(WARM_START_BISECTIONS):
        middle = 0.5 * (lo + hi)
        if _is_interior(region, witness + middle * (warm - witness)):
            lo = middle
        else:
            hi = middle
    return witness + 0.5 * lo * (warm - witness), True


def _finite_difference_hessian(
    region: BallRegion, x: Vector, extra_dims: int, step: float
) -> Matrix:
    m = x.size
    hessian = np.empty((m, m))
    for j in range(m):
        e = np.zeros(m)
        e[j] = step
        hessian[:, j] = (
            volumetric_grad(region, x + e, extra_dims) - volumetric_grad(region, x - e, extra_dims)
        ) / (2.0 * step)
    return 0.5 * (hessian + hessian.T)


def _checked_volumetric_hess(
    region: BallRegion, work: BarrierWorkspace, gradient: Vector, extra_dims: int
) -> tuple[Matrix, bool]:
    """Closed-form Hessian, or a finite-difference one if it fails a directional check."""
    hessian = _volumetric_hess(work, extra_dims)
    norm = float(np.linalg.norm(gradient))
    direction = gradient / norm if norm > 0.0 else np.eye(work.m)[0]
    step = HESSIAN_CHECK_STEP * _boundary_distance(region, work.x)
    difference = (
        volumetric_grad(region, work.x + step * direction, extra_dims)
        - volumetric_grad(region, work.x - step * direction, extra_dims)
    ) / (2.0 * step)
    predicted = hessian @ direction
    error = np.linalg.norm(predicted - difference) / max(np.linalg.norm(difference), 1e-300)
    if error <= HESSIAN_CHECK_TOLERANCE:
        return hessian, False
    logger.warning(f"Volumetric Hessian failed the directional check (rel. error {error:.2e}); using finite differences")
    return _finite_difference_hessian(region, work.x, extra_dims, step), True


def _newton_direction(hessian: Matrix, gradient: Vector) -> Vector:
    try:
        factor = cho_factor(hessian)
    except LinAlgError:
        shift = 1e-10 + abs(float(np.linalg.eigvalsh(hessian)[0]))
        factor = cho_factor(hessian + shift * np.eye(hessian.shape[0]))
    return -cho_solve(factor, gradient)


def newton_center(
    region: BallRegion,
    kind: CenterKind = "volumetric",
    warm: Vector | None = None,
    extra_dims: int = 0,
) -> CenterResult:
    """Damped Newton minimization of the analytic or volumetric barrier."""

    def value_at(x: Vector) -> float:
        if kind == "analytic":
            return analytic_value(region, x)
        return volumetric_value(region, x, extra_dims)

    x, warm_started = _starting_point(region, warm)
    result = CenterResult(
        center=x,
        newton_iterations=0,
        final_decrement=np.inf,
        kind=kind,
        converged=False,
        warm_started=warm_started,
    )
    value = value_at(x)

    for iteration in range(MAX_NEWTON_ITERATIONS + 1):
        work = BarrierWorkspace(region, x)
        if kind == "analytic":
            gradient, hessian = work.A.sum(axis=0), work.H
        else:
            gradient = _volumetric_grad(work, extra_dims)
            hessian, fell_back = _checked_volumetric_hess(region, work, gradient, extra_dims)
            result.hessian_fallbacks += int(fell_back)

        direction = _newton_direction(hessian, gradient)
        decrement = float(np.sqrt(max(-(gradient @ direction), 0.0)))
        result.decrements.append(decrement)
        result.final_decrement = decrement
        if decrement <= DECREMENT_TOLERANCE:
            result.converged = True
            break
        if iteration == MAX_NEWTON_ITERATIONS:
            break

        slope = float(gradient @ direction)
        step = 1.0
        for _ in range(MAX_BACKTRACKS):
            candidate = x + step * direction
            if _is_interior(region, candidate):
                candidate_value = value_at(candidate)
                if candidate_value <= value + ARMIJO * step * slope or (
                    decrement < 1e-3 and candidate_value <= value + 1e-12 * (1.0 + abs(value))
                ):
                    break
            step *= 0.5
        else:
            logger.debug(f"Newton backtracking stalled at decrement {decrement:.3e}")
            break

        x, value = candidate, candidate_value
        result.newton_iterations += 1
        logger.debug(f"newton[{kind}] {iteration}: decrement={decrement:.3e} step={step:.3e}")

    result.center = x
    return result
