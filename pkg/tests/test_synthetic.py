import numpy as np
import pytest

from tgp import synthetic
from tgp.core import datasets_equal
from tgp.proben import parse_proben_file, validate_against_table1

TABLE_DIMS = {
    "cancer": (9, 2, 699),
    "diabetes": (8, 2, 768),
    "heartc": (35, 2, 303),
    "horse": (58, 3, 364),
}


class TestSmallBuilders:
    def test_separable_targets_follow_the_column(self):
        ds = synthetic.separable_two_class(n_inputs=3, bounds=(10, 5, 5), column=1, seed=2)
        assert ds.targets.tolist() == (ds.inputs[:, 1] > 0.5).astype(int).tolist()

    def test_separable_deterministic(self):
        a = synthetic.separable_two_class(seed=5)
        b = synthetic.separable_two_class(seed=5)
        assert datasets_equal(a, b)

    def test_noisy_flips_some_labels(self):
        ds = synthetic.noisy_two_class(n_inputs=4, bounds=(40, 20, 20), seed=1, flip=0.3)
        clean = (ds.inputs[:, 0] > 0.5).astype(int)
        flipped = int(np.sum(clean != ds.targets))
        assert 0 < flipped < ds.m_total

    def test_regression_targets(self):
        ds = synthetic.regression_set(n_inputs=3, bounds=(10, 5, 5), seed=9)
        assert ds.task == "regress"
        expected = np.sin(ds.inputs[:, 0]) + ds.inputs[:, 1] * ds.inputs[:, 2]
        assert np.allclose(ds.targets, expected)


class TestProblems:
    @pytest.mark.parametrize("name", sorted(TABLE_DIMS))
    def test_dimensions_match_the_reference_table(self, name):
        ds = synthetic.make_problem(name)
        assert validate_against_table1(ds, name).passed

    @pytest.mark.parametrize("name", sorted(TABLE_DIMS))
    def test_inputs_stay_in_unit_range(self, name):
        ds = synthetic.make_problem(name)
        assert ds.inputs.min() >= 0.0
        assert ds.inputs.max() <= 1.0

    def test_deterministic(self):
        a = synthetic.make_problem("cancer")
        b = synthetic.make_problem("cancer")
        assert a.inputs.tobytes() == b.inputs.tobytes()
        assert np.array_equal(a.targets, b.targets)

    def test_class_priors_are_respected(self):
        ds = synthetic.make_problem("diabetes")
        share = np.mean(ds.targets == 0)
        assert share == pytest.approx(0.651, abs=0.05)

    def test_horse_has_three_classes(self):
        ds = synthetic.make_problem("horse")
        assert set(np.unique(ds.targets)) == {0, 1, 2}

    def test_permutations_shuffle_the_same_rows(self):
        a = synthetic.make_problem("cancer", permutation=1)
        b = synthetic.make_problem("cancer", permutation=2)
        assert not np.array_equal(a.targets, b.targets) or not np.array_equal(a.inputs, b.inputs)
        rows_a = sorted(map(tuple, np.column_stack([a.inputs, a.targets]).tolist()))
        rows_b = sorted(map(tuple, np.column_stack([b.inputs, b.targets]).tolist()))
        assert rows_a == rows_b

    def test_unknown_problem(self):
        with pytest.raises(KeyError):
            synthetic.make_problem("lymph")

    def test_bad_permutation(self):
        with pytest.raises(ValueError):
            synthetic.make_problem("cancer", permutation=0)

    def test_write_problem_file_round_trips(self, tmp_path):
        path = tmp_path / "cancer1.dt"
        written = synthetic.write_problem_file(path, "cancer")
        assert datasets_equal(written, parse_proben_file(path))
