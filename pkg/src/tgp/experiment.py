"""Multi-run experiments: seeded runs, aggregate statistics, reports.

A single experiment executes ``params.runs`` independent runs with seeds
``params.seed`` … ``params.seed + runs - 1``, scores each champion on the
test partition and aggregates the per-run error rates.  Runs are
independent, so they can be spread over worker processes; records are
always ordered by seed, which keeps every output format deterministic
regardless of scheduling.
"""

from __future__ import annotations

import concurrent.futures
import csv
import io
import json
import math
import time
from dataclasses import dataclass
from pathlib import Path

from tgp.core import Dataset, TgpParams
from tgp.evolve import run
from tgp.proben import parse_proben_file
from tgp.trace import TraceArena, export_expression

FORMATS = ("table", "csv", "json")


def aggregate_stats(rates: list[float]) -> tuple[float, float, float]:
    """(best, mean, sample stddev) of a non-empty list of error rates.

    Best is the minimum; the standard deviation uses the n-1 divisor and
    is 0.0 for a single run.
    """
    if not rates:
        raise ValueError("aggregate_stats needs at least one rate")
    n = len(rates)
    best = min(rates)
    mean = sum(rates) / n
    if n == 1:
        return best, mean, 0.0
    variance = sum((r - mean) ** 2 for r in rates) / (n - 1)
    return best, mean, math.sqrt(variance)


@dataclass(frozen=True)
class RunRecord:
    """Per-run line of the report: the champion and its test performance."""

    seed: int
    champion_generation: int
    validation_errors: float
    test_errors: float
    test_error_rate: float
    champion_expression: str | None = None


@dataclass(frozen=True, eq=False)
class ExperimentReport:
    """Everything one experiment produced.

    ``test_error_rate`` is a percentage of the test partition for
    classification and a per-row mean absolute error for regression.
    ``wall_clock`` holds per-run seconds; being timing, it is left out of
    the emitted formats so identical experiments emit identical bytes.
    """

    problem: str
    task: str
    params: TgpParams
    m_test: int
    records: tuple[RunRecord, ...]
    best: float
    mean: float
    stddev: float
    wall_clock: tuple[float, ...]


def _error_rate(test_errors: float, m_test: int, task: str) -> float:
    if task == "classify":
        return 100.0 * test_errors / m_test
    return test_errors / m_test


def _one_run(dataset: Dataset, params: TgpParams, seed: int, traced: bool):
    started = time.perf_counter()
    arena = TraceArena() if traced else None
    result = run(dataset, params, seed=seed, trace=arena)
    elapsed = time.perf_counter() - started
    expression = None
    if traced and result.champion_trace_id is not None:
        expression = export_expression(arena, result.champion_trace_id)
    record = RunRecord(
        seed=seed,
        champion_generation=result.champion_generation,
        validation_errors=result.champion_validation_errors,
        test_errors=result.champion_test_errors,
        test_error_rate=_error_rate(result.champion_test_errors, dataset.m_test, dataset.task),
        champion_expression=expression,
    )
    return record, elapsed


def run_experiment(
    data,
    params: TgpParams,
    trace: bool = False,
    jobs: int = 1,
    task: str = "classify",
    problem: str | None = None,
) -> ExperimentReport:
    """Execute the full multi-run protocol on a dataset file or Dataset.

    ``jobs`` > 1 distributes runs over that many worker processes; results
    are identical either way.  With ``trace`` on, each record also carries
    its champion's expression text.
    """
    if isinstance(data, Dataset):
        dataset = data
        name = problem or "dataset"
    else:
        path = Path(data)
        dataset = parse_proben_file(path, task=task)
        name = problem or path.stem
    seeds = [params.seed + i for i in range(params.runs)]
    if jobs > 1 and params.runs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=min(jobs, params.runs)) as pool:
            outcomes = list(pool.map(_one_run, *zip(*((dataset, params, s, trace) for s in seeds))))
    else:
        outcomes = [_one_run(dataset, params, s, trace) for s in seeds]
    records = tuple(record for record, _ in outcomes)
    best, mean, stddev = aggregate_stats([r.test_error_rate for r in records])
    return ExperimentReport(
        problem=name,
        task=dataset.task,
        params=params,
        m_test=dataset.m_test,
        records=records,
        best=best,
        mean=mean,
        stddev=stddev,
        wall_clock=tuple(elapsed for _, elapsed in outcomes),
    )


def _params_dict(params: TgpParams) -> dict:
    return {
        "population_size": params.population_size,
        "generations": params.generations,
        "p_insert": params.p_insert,
        "function_set": [s.name for s in params.function_set],
        "seed": params.seed,
        "runs": params.runs,
    }


def emit_report(report: ExperimentReport, format: str = "table") -> str:
    """Render a report as a benchmark-style table, per-run csv, or json."""
    if format == "table":
        header = f"{'problem':<12} {'best':>8} {'mean':>8} {'stddev':>8}"
        row = f"{report.problem:<12} {report.best:>8.2f} {report.mean:>8.2f} {report.stddev:>8.2f}"
        return header + "\n" + row + "\n"
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(
            [
                "problem",
                "row",
                "seed",
                "champion_generation",
                "validation_errors",
                "test_errors",
                "test_error_rate",
                "best",
                "mean",
                "stddev",
            ]
        )
        for record in report.records:
            writer.writerow(
                [
                    report.problem,
                    "run",
                    record.seed,
                    record.champion_generation,
                    record.validation_errors,
                    record.test_errors,
                    f"{record.test_error_rate:.6f}",
                    "",
                    "",
                    "",
                ]
            )
        writer.writerow(
            [
                report.problem,
                "aggregate",
                "",
                "",
                "",
                "",
                "",
                f"{report.best:.6f}",
                f"{report.mean:.6f}",
                f"{report.stddev:.6f}",
            ]
        )
        return buffer.getvalue()
    if format == "json":
        payload = {
            "problem": report.problem,
            "task": report.task,
            "params": _params_dict(report.params),
            "m_test": report.m_test,
            "runs": [
                {
                    "seed": record.seed,
                    "champion_generation": record.champion_generation,
                    "validation_errors": record.validation_errors,
                    "test_errors": record.test_errors,
                    "test_error_rate": record.test_error_rate,
                    **(
                        {"champion_expression": record.champion_expression}
                        if record.champion_expression is not None
                        else {}
                    ),
                }
                for record in report.records
            ],
            "aggregate": {"best": report.best, "mean": report.mean, "stddev": report.stddev},
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    raise ValueError(f"unknown format {format!r}; choose from {FORMATS}")
