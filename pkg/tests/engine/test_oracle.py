from politician.engine.oracle import Oracle, OraclePolitician, oracle_politician
from politician.engine.records import FirstOrderRecord, FunctionObjective, History
from politician.errors import EvaluationError

import numpy as np
import pytest


class TestOracle:
    def test_counts_gradients_and_values_separately(self, square):
        oracle = Oracle(square)
        oracle.first_order(np.array([1.0]))
        oracle.value(np.array([2.0]))
        oracle.value(np.array([3.0]))
        assert oracle.gradient_evaluations == 1
        assert oracle.value_evaluations == 2

    def test_values_are_memoised_until_forgotten(self, square):
        oracle = Oracle(square)
        x = np.array([2.0])
        assert oracle.value(x) == 4.0
        assert oracle.value(x.copy()) == 4.0
        assert oracle.value_evaluations == 1
        oracle.forget()
        oracle.value(x)
        assert oracle.value_evaluations == 2

    def test_forget_keeps_the_answered_record(self, square):
        oracle = Oracle(square)
        record = oracle.first_order(np.array([3.0]))
        oracle.value(np.array([1.0]))
        oracle.forget(keep=record)
        assert oracle.value(np.array([3.0])) == 9.0
        assert oracle.value_evaluations == 1

    def test_first_order_value_is_free_to_reread(self, square):
        oracle = Oracle(square)
        oracle.first_order(np.array([1.5]))
        assert oracle.value(np.array([1.5])) == 2.25
        assert oracle.value_evaluations == 0

    def test_overflowing_value_reads_as_infinity(self):
        objective = FunctionObjective(
            dimension=1,
            evaluator=lambda x: (float(np.exp(x[0])), np.exp(x)),
            value_fn=lambda x: float("nan"),
        )
        assert Oracle(objective).value(np.array([0.0])) == np.inf

    def test_non_finite_gradient_is_an_error(self):
        objective = FunctionObjective(dimension=1, evaluator=lambda x: (1.0, np.array([np.nan])))
        with pytest.raises(EvaluationError):
            Oracle(objective).first_order(np.array([0.0]))

    def test_wrong_dimension_is_an_error(self, square):
        with pytest.raises(EvaluationError):
            Oracle(square).first_order(np.array([1.0, 2.0]))

    def test_note_records_the_current_iteration(self, square):
        oracle = Oracle(square)
        oracle.iteration = 4
        oracle.note("alpha_restart", "inf -> 1")
        assert oracle.events[0].iteration == 4
        assert oracle.events[0].kind == "alpha_restart"


class TestOraclePolitician:
    def test_answers_the_query_itself(self, square):
        record = OraclePolitician().answer(np.array([2.0]), History(), Oracle(square))
        np.testing.assert_array_equal(record.point, [2.0])
        assert record.value == 4.0
        np.testing.assert_array_equal(record.gradient, [4.0])

    def test_function_form(self, square):
        record = oracle_politician(np.array([-1.0]), History(), square)
        assert record.value == 1.0


class TestHistory:
    def test_best_and_fval(self):
        history = History()
        for x, f in [(0.0, 3.0), (1.0, 1.0), (2.0, 2.0), (3.0, 1.0)]:
            history.append(FirstOrderRecord(point=np.array([x]), value=f, gradient=np.array([1.0])))
        assert history.fval == 1.0
        np.testing.assert_array_equal(history.best.point, [1.0])
        np.testing.assert_array_equal(history.last.point, [3.0])
        assert len(history) == 4

    def test_record_rejects_mismatched_gradient(self):
        with pytest.raises(EvaluationError):
            FirstOrderRecord(point=np.zeros(2), value=0.0, gradient=np.zeros(3))
