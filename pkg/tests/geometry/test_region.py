from politician.engine.records import FirstOrderRecord
from politician.errors import RegionError
from politician.geometry.region import (
    Observations,
    ball_from_record,
    build_region,
    feasibility_margin,
    largest_feasible_alpha,
)
from politician.problems import QuadraticProblem

import numpy as np
import pytest


def record(point, value, gradient) -> FirstOrderRecord:
    return FirstOrderRecord(
        point=np.atleast_1d(np.asarray(point, dtype=np.float64)),
        value=float(value),
        gradient=np.atleast_1d(np.asarray(gradient, dtype=np.float64)),
    )


def interval_records(lo: float, hi: float, alpha: float = 2.0) -> FirstOrderRecord:
    """A record whose ball for (alpha, fval=0) is the interval [lo, hi]."""
    center = 0.5 * (lo + hi)
    # on the boundary at y = hi: f(y) = fval, g = alpha (y - center)
    return record(hi, 0.0, alpha * (hi - center))


def quadratic_records(problem: QuadraticProblem, rng: np.random.Generator, k: int) -> list[FirstOrderRecord]:
    records = []
    for _ in range(k):
        x = problem.c + rng.standard_normal(problem.dimension)
        value, gradient = problem.evaluate(x)
        records.append(record(x, value, gradient))
    return records


class TestBallFromRecord:
    def test_square_example(self):
        ball = ball_from_record(record(1.0, 1.0, 2.0), alpha=2.0, fval=1.0)
        np.testing.assert_allclose(ball.center, [0.0])
        assert ball.radius_sq == pytest.approx(1.0)

    def test_point_at_fval_lies_on_the_boundary(self, rng):
        y, g = rng.standard_normal(4), rng.standard_normal(4)
        ball = ball_from_record(record(y, 2.0, g), alpha=3.0, fval=2.0)
        assert np.sum((y - ball.center) ** 2) == pytest.approx(ball.radius_sq)

    def test_too_large_alpha_gives_an_empty_ball(self):
        assert ball_from_record(record(1.0, 1.0, 2.0), alpha=10.0, fval=0.0) is None

    def test_infinite_alpha_is_a_point_or_empty(self):
        ball = ball_from_record(record(1.0, 1.0, 2.0), alpha=np.inf, fval=1.0)
        np.testing.assert_array_equal(ball.center, [1.0])
        assert ball.radius_sq == 0.0
        assert ball_from_record(record(1.0, 1.0, 2.0), alpha=np.inf, fval=0.5) is None

    def test_ball_agrees_with_the_constraint_form(self, rng):
        y, g = rng.standard_normal(3), np.array([1.0, -2.0, 0.5])
        rec = record(y, 1.5, g)
        alpha, fval = 0.7, 1.0
        ball = ball_from_record(rec, alpha, fval)
        observations = Observations.from_records([rec])
        for z in y + 2.0 * rng.standard_normal((200, 3)):
            h = observations.constraint_values(z, alpha, fval)[0]
            inside = np.sum((z - ball.center) ** 2) - ball.radius_sq
            assert h == pytest.approx(0.5 * alpha * inside, abs=1e-10)


class TestFeasibilityMargin:
    def test_single_record(self, rng):
        y, g = rng.standard_normal(3), rng.standard_normal(3)
        margin, witness = feasibility_margin([record(y, 1.0, g)], alpha=2.0)
        assert margin == pytest.approx(-float(g @ g) / 4.0)
        np.testing.assert_allclose(witness, y - g / 2.0)

    def test_overlapping_intervals(self):
        margin, witness = feasibility_margin(
            [interval_records(-1.0, 1.0), interval_records(0.5, 2.5)], alpha=2.0, fval=0.0
        )
        assert margin <= 0.0
        assert 0.5 - 1e-8 <= witness[0] <= 1.0 + 1e-8

    def test_disjoint_intervals(self):
        margin, _ = feasibility_margin(
            [interval_records(-1.0, 0.0), interval_records(1.0, 2.0)], alpha=2.0, fval=0.0
        )
        assert margin > 0.0

    def test_certify_only_agrees_on_the_sign(self):
        overlapping = [interval_records(-1.0, 1.0), interval_records(0.5, 2.5)]
        disjoint = [interval_records(-1.0, 0.0), interval_records(1.0, 2.0)]
        assert feasibility_margin(overlapping, 2.0, 0.0, certify_only=True)[0] <= 0.0
        assert feasibility_margin(disjoint, 2.0, 0.0, certify_only=True)[0] > 0.0

    def test_region_touching_in_one_point_is_nonempty(self):
        # with alpha = mu the balls of records on the flattest axis and of the minimizer meet only there
        problem = QuadraticProblem(D=np.array([0.5, 5.0]), c=np.array([0.3, -0.7]))
        points = [problem.c + [1.0, 0.0], problem.c - [1.0, 0.0], problem.c + [0.0, 0.4], problem.c]
        records = [record(x, *problem.evaluate(x)) for x in points]
        margin, witness = feasibility_margin(records, problem.strong_convexity, certify_only=True)
        assert margin <= 0.0
        np.testing.assert_allclose(witness, problem.c, atol=1e-6)
        alpha = largest_feasible_alpha(records)
        assert problem.strong_convexity <= alpha <= 1.01 * problem.strong_convexity

    def test_true_strong_convexity_is_never_certified_empty(self, rng):
        problem = QuadraticProblem.random(50, seed=0, kappa=100.0)
        alpha = problem.strong_convexity
        records = quadratic_records(problem, rng, 30)
        # a record at the minimizer leaves the region a single point
        records.append(record(problem.c, *problem.evaluate(problem.c)))
        for k in range(1, len(records) + 1):
            margin, _ = feasibility_margin(records[:k], alpha, certify_only=True)
            assert margin <= 0.0, k

    def test_witness_attains_the_minimax(self, rng):
        records = [record(rng.standard_normal(2), rng.uniform(0, 1), rng.standard_normal(2)) for _ in range(5)]
        observations = Observations.from_records(records)
        alpha, fval = 0.5, observations.fval
        margin, witness = feasibility_margin(observations, alpha, fval)
        assert observations.constraint_values(witness, alpha, fval).max() == pytest.approx(margin, abs=1e-10)
        for z in witness + 0.05 * rng.standard_normal((500, 2)):
            assert observations.constraint_values(z, alpha, fval).max() >= margin - 1e-6

    def test_margin_is_nondecreasing_in_alpha(self, rng):
        problem = QuadraticProblem.random(4, seed=1, kappa=10.0)
        observations = Observations.from_records(quadratic_records(problem, rng, 6))
        margins = [feasibility_margin(observations, alpha)[0] for alpha in np.geomspace(1e-3, 1e2, 30)]
        assert np.all(np.diff(margins) >= -1e-6)

    def test_infinite_alpha(self):
        same = [record(1.0, 1.0, 2.0), record(1.0, 1.0, 2.0)]
        assert feasibility_margin(same, np.inf)[0] <= 0.0
        different = [record(1.0, 1.0, 2.0), record(0.0, 0.5, -1.0)]
        assert feasibility_margin(different, np.inf)[0] > 0.0

    def test_halfspace_limit(self, rng):
        y, g = rng.standard_normal(3), rng.standard_normal(3)
        observations = Observations.from_records([record(y, 0.0, g)])
        for z in y + rng.standard_normal((200, 3)):
            h = observations.constraint_values(z, 1e-8, 0.0)[0]
            halfspace = float(g @ (z - y))
            if abs(halfspace) > 1e-6:
                assert (h <= 0.0) == (halfspace <= 0.0)


class TestLargestFeasibleAlpha:
    def test_square_example(self):
        records = [record(1.0, 1.0, 2.0), record(-1.0, 1.0, -2.0)]
        alpha = largest_feasible_alpha(records, fval=1.0)
        assert 4.0 / 1.01 <= alpha <= 4.0 * (1.0 + 1e-9)
        assert feasibility_margin(records, alpha, 1.0)[0] <= 1e-9

    def test_duplicates_keep_the_cap(self):
        records = [record([1.0, 2.0], 3.0, [0.5, -1.0])] * 2
        assert largest_feasible_alpha(records, alpha_hi=7.5) == 7.5

    def test_bisection_brackets_the_threshold(self, rng):
        problem = QuadraticProblem.random(5, seed=2)
        observations = Observations.from_records(quadratic_records(problem, rng, 8))
        alpha = largest_feasible_alpha(observations, alpha_hi=1e6)
        assert feasibility_margin(observations, alpha)[0] <= 1e-6
        assert feasibility_margin(observations, 1.01 * alpha)[0] > 0.0

    def test_true_strong_convexity_is_feasible(self, rng):
        problem = QuadraticProblem.random(6, seed=4, kappa=20.0)
        observations = Observations.from_records(quadratic_records(problem, rng, 10))
        alpha = largest_feasible_alpha(observations)
        assert alpha >= problem.strong_convexity / 1.01


class TestBuildRegion:
    def test_single_record_infinite_alpha_is_the_point(self):
        region = build_region([record([1.0, 2.0], 3.0, [1.0, 1.0])], alpha=np.inf)
        np.testing.assert_array_equal(region.centers, [[1.0, 2.0]])
        assert region.radius_sq[0] == 0.0

    def test_single_record_finite_alpha(self):
        region = build_region([record([1.0, 2.0], 3.0, [1.0, 1.0])], alpha=4.0)
        np.testing.assert_allclose(region.centers[0], [0.75, 1.75])

    def test_minimizer_satisfies_every_constraint(self, rng):
        problem = QuadraticProblem.random(8, seed=5, kappa=10.0)
        records = quadratic_records(problem, rng, 5)
        observations = Observations.from_records(records)
        alpha = problem.strong_convexity
        region = build_region(observations, alpha)
        assert observations.constraint_values(problem.x_star, alpha, observations.fval).max() <= 1e-9
        assert region.contains(problem.x_star, tol=1e-9)

    def test_infeasible_alpha_is_an_error(self):
        with pytest.raises(RegionError):
            build_region([record(1.0, 1.0, 2.0), record(0.0, 0.0, 0.5)], alpha=100.0)
