from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable
from scipy import sparse
from politician.errors import ParseError
from politician.log import get_logger

import numpy as np
import re


logger = get_logger("problems.libsvm")

TOKEN = re.compile(r"\S+")


@dataclass(frozen=True)
class SparseRow:
    label: float
    features: tuple[tuple[int, float], ...]


@dataclass(frozen=True)
class SparseDataset:
    rows: tuple[SparseRow, ...]
    dim: int
    label_mapping: dict[float, float] = field(default_factory=dict, compare=False)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def labels(self) -> np.ndarray:
        return np.array([row.label for row in self.rows])

    def to_matrix(self) -> sparse.csr_matrix:
        """Features as an n x dim CSR matrix (0-based columns)."""
        indptr = [0]
        indices: list[int] = []
        data: list[float] = []
        for row in self.rows:
            for index, value in row.features:
                indices.append(index - 1)
                data.append(value)
            indptr.append(len(indices))
        return sparse.csr_matrix(
            (np.array(data, dtype=np.float64), np.array(indices, dtype=np.int64), np.array(indptr)),
            shape=(len(self.rows), self.dim),
        )


def _lines(text: str | Iterable[str]) -> Iterable[str]:
    return text.splitlines() if isinstance(text, str) else text


def _parse_feature(token: str, line: int, column: int) -> tuple[int, float]:
    index_text, sep, value_text = token.partition(":")
    if not sep:
        raise ParseError(f"expected 'index:value', got {token!r}", line, column)
    try:
        index = int(index_text)
    except ValueError:
        raise ParseError(f"invalid feature index {index_text!r}", line, column) from None
    if index < 1:
        raise ParseError(f"feature index must be >= 1, got {index}", line, column)
    try:
        value = float(value_text)
    except ValueError:
        raise ParseError(f"invalid feature value {value_text!r}", line, column + len(index_text) + 1) from None
    if not np.isfinite(value):
        raise ParseError(f"non-finite feature value {value_text!r}", line, column + len(index_text) + 1)
    return index, value


def parse_libsvm(text: str | Iterable[str]) -> SparseDataset:
    """Parses 'label index:value ...' lines; labels are mapped to +1 (positive) and -1."""
    rows = []
    dim = 0
    mapping: dict[float, float] = {}

    for line_number, raw in enumerate(_lines(text), start=1):
        content = raw.split("#", 1)[0].rstrip("\r\n")
        tokens = list(TOKEN.finditer(content))
        if not tokens:
            continue

        label_token = tokens[0]
        try:
            label = float(label_token.group())
        except ValueError:
            raise ParseError(f"invalid label {label_token.group()!r}", line_number, label_token.start() + 1) from None
        if not np.isfinite(label):
            raise ParseError(f"non-finite label {label_token.group()!r}", line_number, label_token.start() + 1)
        mapped = 1.0 if label > 0 else -1.0
        if label not in (1.0, -1.0):
            mapping[label] = mapped

        features = []
        previous = 0
        for match in tokens[1:]:
            index, value = _parse_feature(match.group(), line_number, match.start() + 1)
            if index <= previous:
                raise ParseError(
                    f"feature indices must be strictly increasing ({index} after {previous})",
                    line_number,
                    match.start() + 1,
                )
            previous = index
            features.append((index, value))
        dim = max(dim, previous)
        rows.append(SparseRow(label=mapped, features=tuple(features)))

    if mapping:
        logger.warning(f"Mapped {len(mapping)} non +-1 label value(s) by sign: {mapping}")
    return SparseDataset(rows=tuple(rows), dim=dim, label_mapping=mapping)


def serialize_libsvm(dataset: SparseDataset) -> str:
    lines = []
    for row in dataset.rows:
        label = "+1" if row.label > 0 else "-1"
        features = " ".join(f"{index}:{float(value)!r}" for index, value in row.features)
        lines.append(f"{label} {features}".rstrip())
    return "\n".join(lines) + "\n" if lines else ""


def load_libsvm(path: str | Path) -> SparseDataset:
    with open(path, encoding="utf-8") as f:
        return parse_libsvm(f)


def synthetic_dataset(rows: int, dim: int, density: float = 0.1, seed: int = 0) -> SparseDataset:
    """Sparse Gaussian features labelled by a random hyperplane with 5% label noise."""
    rng = np.random.default_rng(seed)
    weights = rng.standard_normal(dim)

    dataset_rows = []
    for _ in range(rows):
        count = max(1, int(rng.binomial(dim, density)))
        indices = np.sort(rng.choice(dim, size=count, replace=False))
        values = rng.standard_normal(count)
        label = 1.0 if float(values @ weights[indices]) >= 0.0 else -1.0
        if rng.uniform() < 0.05:
            label = -label
        dataset_rows.append(
            SparseRow(
                label=label,
                features=tuple((int(j) + 1, float(v)) for j, v in zip(indices, values)),
            )
        )
    return SparseDataset(rows=tuple(dataset_rows), dim=dim)
