from dataclasses import dataclass
from typing import Callable
from scipy.optimize import minimize_scalar
from politician.engine.records import Vector
from politician.errors import LineSearchError
from politician.log import get_logger

import numpy as np


logger = get_logger("methods.line_search")

EXPANSION_CAP = 2.0**60
RELATIVE_WIDTH = 4.0 * np.finfo(np.float64).eps
SEGMENT_WIDTH = 1e-12
MAX_BRENT_ITERATIONS = 500


@dataclass(frozen=True, eq=False)
class LineSearchResult:
    t_star: float
    point: Vector
    value: float
    value_evals: int


class _Restriction:
    """phi(t) = f(a + t (b - a)) with memoised samples; t = 0 and t = 1 map to a and b exactly."""

    def __init__(self, value: Callable[[Vector], float], a: Vector, b: Vector):
        self.value = value
        self.a = a
        self.b = b
        self.direction = b - a
        self.samples: dict[float, float] = {}

    def point(self, t: float) -> Vector:
        if t == 0.0:
            return self.a.copy()
        if t == 1.0:
            return self.b.copy()
        return self.a + t * self.direction

    def __call__(self, t: float) -> float:
        t = float(t)
        if t not in self.samples:
            self.samples[t] = float(self.value(self.point(t)))
        return self.samples[t]

    def best(self) -> LineSearchResult:
        # insertion order breaks ties in favour of the anchors
        t, value = min(self.samples.items(), key=lambda item: item[1])
        return LineSearchResult(t_star=t, point=self.point(t), value=value, value_evals=len(self.samples))


def _bracket(phi: _Restriction) -> tuple[float, float, float] | None:
    """A triple lo, mid, hi with phi(mid) below both ends, or None when phi looks flat."""
    f0, f1 = phi(0.0), phi(1.0)
    if f1 < f0:
        lo, mid, hi = 0.0, 1.0, 2.0
    elif f1 > f0:
        lo, mid, hi = 1.0, 0.0, -1.0
    else:
        lo, mid, hi = 0.0, 0.5, 1.0
        if not phi(mid) < f0:
            return None
        return lo, mid, hi

    while phi(hi) < phi(mid):
        if abs(hi) >= EXPANSION_CAP:
            raise LineSearchError(
                f"Objective still decreasing at t={hi:.3e} along the line; it looks unbounded below"
            )
        lo, mid, hi = mid, hi, 2.0 * hi

    if phi(hi) == phi(mid):
        middle = 0.5 * (mid + hi)
        if not phi(middle) < phi(mid):
            return None
        lo, mid = mid, middle
    return lo, mid, hi


def exact_line_search(
    value: Callable[[Vector], float],
    a: Vector,
    b: Vector,
    segment: bool = False,
) -> LineSearchResult:
    """Minimizes f over the line through `a` (t = 0) and `b` (t = 1).

    With `segment`, t is restricted to [0, 1]. The returned point is the best
    one evaluated, so its value never exceeds f(a) or f(b).
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    phi = _Restriction(value, a, b)
    if np.array_equal(a, b):
        phi(0.0)
        return phi.best()

    if segment:
        phi(0.0)
        phi(1.0)
        minimize_scalar(
            phi,
            bounds=(0.0, 1.0),
            method="bounded",
            options={"xatol": SEGMENT_WIDTH, "maxiter": MAX_BRENT_ITERATIONS},
        )
        return phi.best()

    bracket = _bracket(phi)
    if bracket is not None:
        try:
            minimize_scalar(
                phi,
                bracket=bracket,
                method="brent",
                options={"xtol": RELATIVE_WIDTH, "maxiter": MAX_BRENT_ITERATIONS},
            )
        except ValueError as e:
            logger.debug(f"Brent rejected bracket {bracket}: {e}")
    return phi.best()
