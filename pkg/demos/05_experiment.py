"""The multi-run protocol behind every reported number.

An experiment runs several independent seeds, scores each champion on
the held-out test partition, and aggregates best/mean/stddev of the
error rates.  Shrunk parameters keep this demo to a few seconds; the
benchmark setting is population 500, 1000 generations, 30 runs.
"""

import pathlib

from tgp.core import TgpParams
from tgp.experiment import emit_report, run_experiment

data_file = pathlib.Path(__file__).resolve().parent.parent / "data" / "diabetes1.dt"

params = TgpParams(population_size=100, generations=150, seed=0, runs=5)
report = run_experiment(data_file, params, trace=True)

print(emit_report(report, "table"))
print("per-run detail:")
for record in report.records:
    print(f"  seed {record.seed}: champion from generation {record.champion_generation:>4}, "
          f"test error {record.test_error_rate:.2f}%")

print("\none champion formula:")
print(" ", report.records[0].champion_expression)

print("\nthe same report as csv:")
print(emit_report(report, "csv"))
