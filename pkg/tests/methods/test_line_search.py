from politician.errors import LineSearchError
from politician.methods.line_search import exact_line_search
from politician.problems import QuadraticProblem

import numpy as np
import pytest


def square(x: np.ndarray) -> float:
    return float(x @ x)


class TestExactLineSearch:
    def test_symmetric_quadratic(self):
        result = exact_line_search(square, np.array([1.0]), np.array([-1.0]))
        assert result.point[0] == pytest.approx(0.0, abs=1e-12)
        assert result.value == pytest.approx(0.0, abs=1e-24)
        assert result.t_star == pytest.approx(0.5)

    def test_matches_the_closed_form_step(self, rng):
        problem = QuadraticProblem.random(10, seed=8, kappa=30.0)
        p = rng.standard_normal(10)
        _, gradient = problem.evaluate(p)
        result = exact_line_search(problem.value, p, p - gradient)
        # f = (x - c)^T D (x - c), so t* = g^T g / (2 g^T D g)
        expected = float(gradient @ gradient) / (2.0 * float(gradient @ (problem.D * gradient)))
        assert result.t_star == pytest.approx(expected, rel=1e-6)
        assert result.value <= problem.value(p - expected * gradient) * (1.0 + 1e-12) + 1e-15

    def test_degenerate_segment_returns_the_point(self):
        a = np.array([2.0, -1.0])
        result = exact_line_search(square, a, a.copy())
        np.testing.assert_array_equal(result.point, a)
        assert result.value_evals == 1
        assert result.t_star == 0.0

    def test_unbounded_direction_is_an_error(self):
        with pytest.raises(LineSearchError):
            exact_line_search(lambda x: -float(x[0]), np.array([0.0]), np.array([1.0]))

    def test_search_extends_past_the_second_point(self):
        result = exact_line_search(lambda x: float((x[0] - 10.0) ** 2), np.array([0.0]), np.array([1.0]))
        assert result.point[0] == pytest.approx(10.0, abs=1e-6)

    def test_search_extends_behind_the_first_point(self):
        result = exact_line_search(lambda x: float((x[0] + 3.0) ** 2), np.array([0.0]), np.array([1.0]))
        assert result.point[0] == pytest.approx(-3.0, abs=1e-6)

    def test_flat_line_keeps_the_first_point(self):
        a, b = np.array([1.0, 1.0]), np.array([2.0, 3.0])
        result = exact_line_search(lambda x: 5.0, a, b)
        np.testing.assert_array_equal(result.point, a)

    def test_never_worse_than_either_end(self, rng):
        problem = QuadraticProblem.random(6, seed=9)
        for _ in range(20):
            a, b = rng.standard_normal(6), rng.standard_normal(6)
            result = exact_line_search(problem.value, a, b)
            assert result.value <= min(problem.value(a), problem.value(b))


class TestSegmentSearch:
    def test_interior_minimum(self):
        result = exact_line_search(
            lambda x: float((x[0] - 0.3) ** 2), np.array([0.0]), np.array([1.0]), segment=True
        )
        assert result.point[0] == pytest.approx(0.3, abs=1e-6)

    def test_minimum_outside_the_segment_gives_the_endpoint(self):
        b = np.array([1.0])
        result = exact_line_search(lambda x: float((x[0] - 3.0) ** 2), np.array([0.0]), b, segment=True)
        assert result.t_star == 1.0
        np.testing.assert_array_equal(result.point, b)
