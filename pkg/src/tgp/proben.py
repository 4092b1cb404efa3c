"""Reader and writer for the partitioned benchmark text format.

A file is seven ``key=value`` header lines (counts of boolean/real input
and output columns plus the three partition sizes, in any order) followed
by whitespace-separated numeric rows ordered training, validation, test.
Classification targets arrive one-hot and are decoded to a single class
index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from tgp.core import Dataset

HEADER_KEYS = (
    "bool_in",
    "real_in",
    "bool_out",
    "real_out",
    "training_examples",
    "validation_examples",
    "test_examples",
)

# (inputs, classes, examples) for the four reference problems
TABLE1_EXPECTED: dict[str, tuple[int, int, int]] = {
    "cancer": (9, 2, 699),
    "diabetes": (8, 2, 768),
    "heartc": (35, 2, 303),
    "horse": (58, 3, 364),
}


class ProbenFormatError(ValueError):
    """Malformed header line or data row; the message names the place."""


class ProbenConsistencyError(ValueError):
    """Header counts and actual rows disagree."""


@dataclass(frozen=True)
class ProbenHeader:
    bool_in: int
    real_in: int
    bool_out: int
    real_out: int
    training_examples: int
    validation_examples: int
    test_examples: int

    def __post_init__(self):
        for key in HEADER_KEYS:
            if getattr(self, key) < 0:
                raise ValueError(f"header {key} must be non-negative")
        if self.n_inputs < 1:
            raise ValueError("header declares no input columns")
        if self.n_outputs < 1:
            raise ValueError("header declares no output columns")

    @property
    def n_inputs(self) -> int:
        return self.bool_in + self.real_in

    @property
    def n_outputs(self) -> int:
        return self.bool_out + self.real_out

    @property
    def bounds(self) -> tuple[int, int, int]:
        return (self.training_examples, self.validation_examples, self.test_examples)


def _parse_header_line(lineno: int, line: str, seen: dict) -> None:
    key, eq, value = line.partition("=")
    key = key.strip()
    value = value.strip()
    if not eq or key not in HEADER_KEYS:
        raise ProbenFormatError(f"line {lineno}: expected one of {'/'.join(HEADER_KEYS)}=<count>, got {line!r}")
    if key in seen:
        raise ProbenFormatError(f"line {lineno}: duplicate header key {key!r}")
    try:
        seen[key] = int(value)
    except ValueError:
        raise ProbenFormatError(f"line {lineno}: header value for {key} is not an integer: {value!r}") from None


def parse_proben(text: str, task: str = "classify") -> Dataset:
    """Parse file content into a partitioned :class:`Dataset`.

    With two or more output columns the class is the argmax (ties to the
    lowest index); a single output column thresholds at 0.5.  For
    ``task="regress"`` the first output column is kept as a real target
    instead.
    """
    if task not in ("classify", "regress"):
        raise ValueError(f"unknown task {task!r}")
    header_fields: dict[str, int] = {}
    data_rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if len(header_fields) < len(HEADER_KEYS):
            _parse_header_line(lineno, line, header_fields)
        else:
            data_rows.append((lineno, line))
    if len(header_fields) < len(HEADER_KEYS):
        missing = sorted(set(HEADER_KEYS) - set(header_fields))
        raise ProbenFormatError(f"file ended before header was complete; missing {missing}")
    try:
        header = ProbenHeader(**header_fields)
    except ValueError as exc:
        raise ProbenFormatError(str(exc)) from None

    n_columns = header.n_inputs + header.n_outputs
    values = np.empty((len(data_rows), n_columns), dtype=np.float64)
    for row_number, (lineno, line) in enumerate(data_rows, start=1):
        tokens = line.split()
        if len(tokens) != n_columns:
            raise ProbenFormatError(
                f"data row {row_number} (line {lineno}): expected {n_columns} columns, got {len(tokens)}"
            )
        try:
            values[row_number - 1] = tokens
        except ValueError:
            raise ProbenFormatError(f"data row {row_number} (line {lineno}): non-numeric token") from None

    declared = sum(header.bounds)
    if declared != len(data_rows):
        raise ProbenConsistencyError(f"header declares {declared} examples but the file holds {len(data_rows)} rows")

    inputs = values[:, : header.n_inputs]
    outputs = values[:, header.n_inputs :]
    if task == "regress":
        return Dataset(inputs=inputs, targets=outputs[:, 0], n_classes=0, bounds=header.bounds)
    if header.n_outputs >= 2:
        targets = np.argmax(outputs, axis=1)
    else:
        targets = (outputs[:, 0] >= 0.5).astype(np.int64)
    return Dataset(inputs=inputs, targets=targets, n_classes=max(header.n_outputs, 2), bounds=header.bounds)


def parse_proben_file(path, task: str = "classify") -> Dataset:
    with open(path, "r", encoding="ascii") as fh:
        return parse_proben(fh.read(), task=task)


def serialize_proben(dataset: Dataset) -> str:
    """Write a classification dataset back to the text format.

    Inputs are printed with shortest round-trip precision and targets as
    one-hot integer columns, so parsing the result reproduces the dataset
    exactly.
    """
    if dataset.task != "classify":
        raise ValueError("only classification datasets serialize to the one-hot text format")
    lines = [
        "bool_in=0",
        f"real_in={dataset.n_inputs}",
        f"bool_out={dataset.n_classes}",
        "real_out=0",
        f"training_examples={dataset.m_train}",
        f"validation_examples={dataset.m_val}",
        f"test_examples={dataset.m_test}",
    ]
    for row, target in zip(dataset.inputs, dataset.targets, strict=True):
        cells = [repr(float(v)) for v in row]
        cells.extend("1" if k == target else "0" for k in range(dataset.n_classes))
        lines.append(" ".join(cells))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ValidationReport:
    """Comparison of a parsed dataset against the reference dimensions."""

    problem: str
    expected: tuple[int, int, int]
    actual: tuple[int, int, int]
    mismatches: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = (
            f"{status} {self.problem}: (inputs, classes, examples) "
            f"expected {self.expected}, got {self.actual}"
        )
        return "\n".join([head, *(f"  mismatch {m}" for m in self.mismatches)])


def validate_against_table1(dataset: Dataset, problem: str) -> ValidationReport:
    """Check (n_inputs, n_classes, m_total) against the reference table."""
    if problem not in TABLE1_EXPECTED:
        raise KeyError(f"unknown problem {problem!r}; choose from {sorted(TABLE1_EXPECTED)}")
    expected = TABLE1_EXPECTED[problem]
    actual = (dataset.n_inputs, dataset.n_classes, dataset.m_total)
    labels = ("n_inputs", "n_classes", "m_total")
    mismatches = tuple(
        f"{label}: expected {want}, got {got}"
        for label, want, got in zip(labels, expected, actual, strict=True)
        if want != got
    )
    return ValidationReport(problem=problem, expected=expected, actual=actual, mismatches=mismatches)
