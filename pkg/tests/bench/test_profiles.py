from politician.bench.profiles import PLOT_SCRIPT_NAME, PROFILE_NAME, performance_profile, write_profile
from politician.errors import ProfileError

import numpy as np
import pandas as pd
import pytest


TOY = {"A": {"p1": 10, "p2": 20}, "B": {"p1": 20, "p2": 10}}


class TestPerformanceProfile:
    def test_toy_table(self):
        curve = performance_profile(TOY, x_grid=np.array([1.0, 1.5, 2.0]))
        np.testing.assert_array_equal(curve.fraction_solved["A"], [0.5, 0.5, 1.0])
        np.testing.assert_array_equal(curve.fraction_solved["B"], [0.5, 0.5, 1.0])

    def test_single_method_is_constant(self):
        curve = performance_profile({"A": {"p1": 3, "p2": 40}})
        np.testing.assert_array_equal(curve.fraction_solved["A"], np.ones(91))

    def test_method_that_never_solves(self):
        curve = performance_profile({"A": {"p1": 3, "p2": 4}, "B": {"p1": None, "p2": None}})
        np.testing.assert_array_equal(curve.fraction_solved["B"], np.zeros(91))
        assert curve.fraction_solved["A"][0] == 1.0

    def test_unsolved_problem_counts_against_everyone(self):
        curve = performance_profile({"A": {"p1": 5, "p2": None}, "B": {"p1": 10, "p2": None}})
        assert curve.fraction_solved["A"].max() == 0.5
        assert curve.fraction_solved["B"][-1] == 0.5

    def test_best_method_has_ratio_one(self):
        results = {"A": {"p1": 7, "p2": 9, "p3": 30}, "B": {"p1": 8, "p2": 3, "p3": None}}
        curve = performance_profile(results, x_grid=np.array([1.0]))
        assert curve.fraction_solved["A"][0] + curve.fraction_solved["B"][0] == pytest.approx(1.0)

    def test_curves_are_nondecreasing_fractions(self, rng):
        results = {
            method: {f"p{i}": (None if rng.uniform() < 0.2 else int(rng.integers(1, 100))) for i in range(25)}
            for method in ("sd", "cg", "bfgs+")
        }
        curve = performance_profile(results)
        for fractions in curve.fraction_solved.values():
            assert np.all(np.diff(fractions) >= 0.0)
            assert fractions.min() >= 0.0 and fractions.max() <= 1.0

    def test_order_invariance(self):
        reordered = {"B": {"p2": 10, "p1": 20}, "A": {"p2": 20, "p1": 10}}
        first, second = performance_profile(TOY), performance_profile(reordered)
        for method in TOY:
            np.testing.assert_array_equal(first.fraction_solved[method], second.fraction_solved[method])

    @pytest.mark.parametrize("results", [{}, {"A": {}}])
    def test_empty_results(self, results):
        with pytest.raises(ProfileError):
            performance_profile(results)


def test_write_profile(tmp_path):
    path = write_profile(performance_profile(TOY), tmp_path)
    assert path == tmp_path / PROFILE_NAME
    frame = pd.read_csv(path)
    assert list(frame.columns) == ["x", "A", "B"]
    assert frame["x"].iloc[0] == 1.0 and frame["x"].iloc[-1] == 10.0
    assert (tmp_path / PLOT_SCRIPT_NAME).read_text(encoding="utf-8").startswith('"""Plots profile.csv')
