import json
import math
import statistics

import numpy as np
import pytest

from tgp import synthetic
from tgp.core import TgpParams
from tgp.experiment import ExperimentReport, aggregate_stats, emit_report, run_experiment
from tgp.proben import serialize_proben

SMALL = TgpParams(population_size=16, generations=8, seed=100, runs=3)


class TestAggregateStats:
    def test_identical_rates(self):
        assert aggregate_stats([2.0, 2.0, 2.0]) == (2.0, 2.0, 0.0)

    def test_two_rates(self):
        best, mean, stddev = aggregate_stats([1.0, 3.0])
        assert (best, mean) == (1.0, 2.0)
        assert stddev == pytest.approx(math.sqrt(2.0))

    def test_single_rate_has_zero_spread(self):
        assert aggregate_stats([7.5]) == (7.5, 7.5, 0.0)

    def test_against_statistics_module(self):
        rng = np.random.default_rng(4)
        for _ in range(20):
            rates = rng.uniform(0, 50, size=int(rng.integers(2, 12))).tolist()
            best, mean, stddev = aggregate_stats(rates)
            assert best == min(rates)
            assert mean == pytest.approx(statistics.fmean(rates))
            assert stddev == pytest.approx(statistics.stdev(rates))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            aggregate_stats([])


class TestRunExperiment:
    def test_record_per_seed(self, small_dataset):
        report = run_experiment(small_dataset, SMALL)
        assert [r.seed for r in report.records] == [100, 101, 102]
        assert len(report.wall_clock) == 3

    def test_rates_follow_test_errors(self, small_dataset):
        report = run_experiment(small_dataset, SMALL)
        for r in report.records:
            assert r.test_error_rate == pytest.approx(100.0 * r.test_errors / small_dataset.m_test)

    def test_aggregate_matches_records(self, small_dataset):
        report = run_experiment(small_dataset, SMALL)
        best, mean, stddev = aggregate_stats([r.test_error_rate for r in report.records])
        assert (report.best, report.mean, report.stddev) == (best, mean, stddev)

    def test_deterministic_across_calls(self, small_dataset):
        a = run_experiment(small_dataset, SMALL)
        b = run_experiment(small_dataset, SMALL)
        assert a.records == b.records

    def test_jobs_do_not_change_results(self, small_dataset):
        serial = run_experiment(small_dataset, SMALL)
        parallel = run_experiment(small_dataset, SMALL, jobs=2)
        assert serial.records == parallel.records

    def test_trace_attaches_expressions(self, small_dataset):
        report = run_experiment(small_dataset, SMALL, trace=True)
        for r in report.records:
            assert r.champion_expression
            assert r.champion_expression.count("(") == r.champion_expression.count(")")

    def test_untraced_records_have_no_expression(self, small_dataset):
        report = run_experiment(small_dataset, SMALL)
        assert all(r.champion_expression is None for r in report.records)

    def test_accepts_a_file_path(self, small_dataset, tmp_path):
        path = tmp_path / "noisy.dt"
        path.write_text(serialize_proben(small_dataset), encoding="ascii")
        from_file = run_experiment(path, SMALL)
        from_memory = run_experiment(small_dataset, SMALL)
        assert from_file.records == from_memory.records
        assert from_file.problem == "noisy"

    def test_regression_rate_is_mean_absolute_error(self):
        ds = synthetic.regression_set(bounds=(20, 8, 8), seed=5)
        report = run_experiment(ds, TgpParams(population_size=12, generations=6, seed=0, runs=2))
        assert report.task == "regress"
        for r in report.records:
            assert r.test_error_rate == pytest.approx(r.test_errors / ds.m_test)


class TestEmit:
    @pytest.fixture()
    def report(self, small_dataset):
        return run_experiment(small_dataset, SMALL, problem="noisy")

    def test_table_is_one_summary_row(self, report):
        lines = emit_report(report, "table").splitlines()
        assert len(lines) == 2
        assert lines[0].split() == ["problem", "best", "mean", "stddev"]
        assert lines[1].startswith("noisy")

    def test_csv_rows(self, report):
        lines = emit_report(report, "csv").splitlines()
        assert len(lines) == 1 + len(report.records) + 1
        assert lines[0].startswith("problem,row,seed")
        assert lines[1].split(",")[1] == "run"
        assert lines[-1].split(",")[1] == "aggregate"
        assert f"{report.mean:.6f}" in lines[-1]

    def test_json_round_trip(self, report):
        payload = json.loads(emit_report(report, "json"))
        assert payload["problem"] == "noisy"
        assert payload["params"]["population_size"] == 16
        assert len(payload["runs"]) == 3
        assert payload["aggregate"]["best"] == report.best
        assert payload["runs"][0]["seed"] == 100

    def test_json_bytes_are_reproducible(self, small_dataset):
        a = emit_report(run_experiment(small_dataset, SMALL), "json")
        b = emit_report(run_experiment(small_dataset, SMALL), "json")
        assert a == b

    def test_json_includes_expression_only_when_traced(self, small_dataset):
        traced = run_experiment(small_dataset, SMALL, trace=True)
        payload = json.loads(emit_report(traced, "json"))
        assert all("champion_expression" in entry for entry in payload["runs"])
        plain = json.loads(emit_report(run_experiment(small_dataset, SMALL), "json"))
        assert all("champion_expression" not in entry for entry in plain["runs"])

    def test_unknown_format(self, report):
        with pytest.raises(ValueError):
            emit_report(report, "yaml")

    def test_report_is_frozen(self, report):
        assert isinstance(report, ExperimentReport)
        with pytest.raises(AttributeError):
            report.best = 0.0
