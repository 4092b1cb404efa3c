"""Reading and checking partitioned benchmark files.

The text format is seven key=value header lines followed by one row per
example: input columns, then one-hot target columns.  Rows are ordered
training, validation, test, with the split sizes in the header.
"""

import pathlib

from tgp.core import datasets_equal
from tgp.proben import parse_proben, parse_proben_file, serialize_proben, validate_against_table1

data_dir = pathlib.Path(__file__).resolve().parent.parent / "data"

dataset = parse_proben_file(data_dir / "cancer1.dt")
print(f"cancer1.dt: {dataset.n_inputs} inputs, {dataset.n_classes} classes, "
      f"{dataset.m_total} rows split {dataset.bounds}")

report = validate_against_table1(dataset, "cancer")
print(report.summary())

# serialization round-trips exactly
again = parse_proben(serialize_proben(dataset))
print(f"serialize -> parse is the identity: {datasets_equal(dataset, again)}")

# a malformed file names the offending place
bad = "bool_in=1\nwhat is this\n"
try:
    parse_proben(bad)
except ValueError as exc:
    print(f"\nmalformed input is rejected with a location: {exc}")
