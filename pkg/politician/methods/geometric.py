"""
The geometric politician.

Keeps the intersection of the strong convexity balls of all answers, and
answers a query x with the best point on the line through x and the
volumetric center of that region. All geometry runs in the coordinates of the
subspace spanned by the answers and gradients seen so far, which is exact
because the region and its center are affine invariant.

The strong convexity estimate starts at `alpha` (default +inf) and is cut to a
quarter of the largest feasible value whenever the region becomes empty.
"""

from dataclasses import dataclass, field
from politician.engine.oracle import Oracle
from politician.engine.records import FirstOrderRecord, History, Vector
from politician.errors import BarrierDomainError, CenteringError, RegionError
from politician.geometry import (
    CenterKind,
    Observations,
    SubspaceBasis,
    build_region,
    feasibility_margin,
    largest_feasible_alpha,
    newton_center,
)
from politician.log import get_logger
from politician.methods.line_search import exact_line_search

import numpy as np


logger = get_logger("methods.geometric")

RESTART_FACTOR = 4.0


@dataclass
class PoliticianState:
    alpha: float
    restarts: int = 0
    centering_failures: int = 0
    hessian_fallbacks: int = 0
    cached_center: Vector | None = None
    warm_newton_iterations: list[int] = field(default_factory=list)


class GeometricPolitician:
    name: str = "geometric"

    def __init__(
        self,
        alpha: float = np.inf,
        center: CenterKind = "volumetric",
        reduce_dimension: bool = True,
    ):
        if not alpha > 0.0:
            raise ValueError(f"alpha must be positive, got {alpha!r}")
        self.initial_alpha = float(alpha)
        self.center_kind: CenterKind = center
        self.reduce_dimension = reduce_dimension
        self.dimension = 0
        self.state = PoliticianState(alpha=self.initial_alpha)
        self.basis: SubspaceBasis | None = None
        self._points: list[Vector] = []
        self._gradients: list[Vector] = []

    def reset(self, dimension: int):
        self.dimension = dimension
        self.state = PoliticianState(alpha=self.initial_alpha)
        self.basis = None
        self._points = []
        self._gradients = []

    @property
    def alpha(self) -> float | None:
        return self.state.alpha

    def _absorb(self, record: FirstOrderRecord):
        if self.basis is None:
            if self.reduce_dimension:
                self.basis = SubspaceBasis(self.dimension).set_base(record.point)
            else:
                self.basis = SubspaceBasis.full(self.dimension, record.point)
        else:
            self.basis.insert(record.point - self.basis.base)
        self.basis.insert(record.gradient)
        self._points.append(self.basis.reduce(record.point))
        self._gradients.append(self.basis.coordinates(record.gradient))

    def _padded(self, u: Vector) -> Vector:
        padded = np.zeros(self.basis.m)
        padded[: u.size] = u
        return padded

    def observations(self, history: History) -> Observations:
        if len(self._points) != len(history):
            self.basis = None
            self._points, self._gradients = [], []
            self.state.cached_center = None
            for record in history:
                self._absorb(record)
        return Observations(
            points=np.array([self._padded(u) for u in self._points]),
            values=np.array([record.value for record in history]),
            gradients=np.array([self._padded(g) for g in self._gradients]),
        )

    def _is_empty(self, observations: Observations, fval: float) -> bool:
        alpha = self.state.alpha
        cached = self.state.cached_center
        if np.isfinite(alpha) and cached is not None:
            if np.all(observations.constraint_values(self._padded(cached), alpha, fval) < 0.0):
                return False
        margin, _ = feasibility_margin(observations, alpha, fval, certify_only=True)
        return margin > 0.0

    def _restart(self, observations: Observations, fval: float, oracle: Oracle):
        largest = largest_feasible_alpha(observations, fval, alpha_hi=self.state.alpha)
        previous = self.state.alpha
        self.state.alpha = min(largest / RESTART_FACTOR, previous)
        self.state.restarts += 1
        oracle.note("alpha_restart", f"{previous:.6e} -> {self.state.alpha:.6e}")
        logger.info(f"Region empty; alpha {previous:.6e} -> {self.state.alpha:.6e}")

    def _center(self, observations: Observations, fval: float, oracle: Oracle) -> Vector:
        """Center of the region in reduced coordinates; requires a finite alpha."""
        region = build_region(observations, self.state.alpha, fval)
        extra_dims = self.dimension - self.basis.m
        warm = None if self.state.cached_center is None else self._padded(self.state.cached_center)
        result = newton_center(region, kind=self.center_kind, warm=warm, extra_dims=extra_dims)
        if result.hessian_fallbacks:
            self.state.hessian_fallbacks += result.hessian_fallbacks
            oracle.note("hessian_fallback", f"{result.hessian_fallbacks} finite-difference Hessians")
        if result.warm_started:
            self.state.warm_newton_iterations.append(result.newton_iterations)
        self.state.cached_center = result.center.copy()
        return result.center

    def _search_target(self, x: Vector, center: Vector, history: History) -> Vector:
        """Second point of the line searched for the answer."""
        if not np.array_equal(center, x):
            return center
        best = history.best
        if not np.array_equal(best.point, x):
            return best.point
        # centers for finite alpha leave the best point along its negative gradient
        logger.debug("Query is the center; searching along the negative gradient")
        return x - best.gradient

    def _fallback(self, x: Vector, history: History, oracle: Oracle, error: Exception) -> FirstOrderRecord:
        self.state.centering_failures += 1
        self.state.cached_center = None
        best = history.best
        logger.warning(f"Centering failed ({error}); falling back")
        oracle.note("centering_fallback", str(error))
        point = best.point if best.value <= oracle.value(x) else x
        return oracle.first_order(point)

    def answer(self, x: Vector, history: History, oracle: Oracle) -> FirstOrderRecord:
        x = np.asarray(x, dtype=np.float64)
        if len(history) == 0:
            record = oracle.first_order(x)
            self._absorb(record)
            return record

        observations = self.observations(history)
        fval = observations.fval
        try:
            if self._is_empty(observations, fval):
                self._restart(observations, fval, oracle)
            if np.isinf(self.state.alpha):
                center = np.array(history.best.point, copy=True)
            else:
                center = self.basis.lift(self._center(observations, fval, oracle))
        except (CenteringError, BarrierDomainError, RegionError) as e:
            record = self._fallback(x, history, oracle, e)
            self._absorb(record)
            return record

        search = exact_line_search(oracle.value, x, self._search_target(x, center, history))
        record = oracle.first_order(search.point)
        self._absorb(record)
        return record
