import pathlib

import pytest

from tgp import synthetic

DATA_DIR = pathlib.Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def small_dataset():
    """Two-class set with label noise: 4 inputs, 60 rows split 20/20/20."""
    return synthetic.noisy_two_class(n_inputs=4, bounds=(20, 20, 20), seed=424)


@pytest.fixture
def separable_dataset():
    """Targets are a thresholded copy of input column 0."""
    return synthetic.separable_two_class(n_inputs=4, bounds=(20, 20, 20), seed=77)


@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR
