from politician.errors import ParseError
from politician.problems import (
    SparseDataset,
    SparseRow,
    load_libsvm,
    parse_libsvm,
    serialize_libsvm,
    synthetic_dataset,
)

import numpy as np
import pytest


class TestParseLibsvm:
    def test_single_row(self):
        dataset = parse_libsvm("+1 1:0.5 3:-2\n")
        assert dataset.rows == (SparseRow(label=1.0, features=((1, 0.5), (3, -2.0))),)
        assert dataset.dim == 3

    def test_row_without_features(self):
        dataset = parse_libsvm("-1\n")
        assert dataset.rows == (SparseRow(label=-1.0, features=()),)
        assert dataset.dim == 0

    def test_blank_lines_and_comments_are_skipped(self):
        text = "# header\n\n+1 2:1.0  # trailing\n   \n-1 1:3\n"
        dataset = parse_libsvm(text)
        assert len(dataset) == 2
        np.testing.assert_array_equal(dataset.labels, [1.0, -1.0])

    def test_labels_are_mapped_by_sign(self):
        dataset = parse_libsvm("2 1:1\n0 1:1\n-3 1:1\n1 1:1\n")
        np.testing.assert_array_equal(dataset.labels, [1.0, -1.0, -1.0, 1.0])
        assert dataset.label_mapping == {2.0: 1.0, 0.0: -1.0, -3.0: -1.0}

    @pytest.mark.parametrize(
        "text, line, column",
        [
            ("1 3:1 2:1\n", 1, 7),
            ("+1 1:1\n-1 0:4\n", 2, 4),
            ("+1 1:1\n\n# note\nabc 1:1\n", 4, 1),
            ("+1 1:x\n", 1, 6),
            ("+1 1-2\n", 1, 4),
            ("+1 2:1 2:3\n", 1, 8),
        ],
    )
    def test_errors_carry_line_and_column(self, text, line, column):
        with pytest.raises(ParseError) as error:
            parse_libsvm(text)
        assert (error.value.line, error.value.column) == (line, column)
        assert f"line {line}" in str(error.value)

    def test_round_trip_on_a_synthetic_corpus(self):
        dataset = synthetic_dataset(1000, 60, density=0.05, seed=7)
        assert parse_libsvm(serialize_libsvm(dataset)) == dataset

    def test_serialized_labels(self):
        text = serialize_libsvm(parse_libsvm("3 1:0.25\n-2\n"))
        assert text == "+1 1:0.25\n-1\n"

    def test_empty_input(self):
        dataset = parse_libsvm("")
        assert len(dataset) == 0
        assert serialize_libsvm(dataset) == ""

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "tiny.svm"
        path.write_text("+1 1:0.5 4:1\n-1 2:2\n", encoding="utf-8")
        dataset = load_libsvm(path)
        assert dataset.dim == 4
        assert len(dataset) == 2


class TestSparseDataset:
    def test_to_matrix(self):
        dataset = SparseDataset(
            rows=(
                SparseRow(label=1.0, features=((1, 2.0), (3, -1.0))),
                SparseRow(label=-1.0, features=()),
            ),
            dim=4,
        )
        matrix = dataset.to_matrix()
        assert matrix.shape == (2, 4)
        np.testing.assert_array_equal(matrix.toarray(), [[2.0, 0.0, -1.0, 0.0], [0.0, 0.0, 0.0, 0.0]])

    def test_synthetic_dataset_is_reproducible(self):
        assert synthetic_dataset(50, 10, seed=3) == synthetic_dataset(50, 10, seed=3)
        assert synthetic_dataset(50, 10, seed=3) != synthetic_dataset(50, 10, seed=4)

    def test_synthetic_rows_are_sorted_and_in_range(self):
        dataset = synthetic_dataset(200, 15, density=0.3, seed=5)
        for row in dataset.rows:
            indices = [index for index, _ in row.features]
            assert indices == sorted(set(indices))
            assert all(1 <= index <= 15 for index in indices)
            assert row.label in (1.0, -1.0)
