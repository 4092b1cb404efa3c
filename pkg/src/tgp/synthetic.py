"""Deterministic synthetic datasets.

Two kinds of builders live here: small sets used by tests and demos
(separable, noisy, regression), and latent-factor generators that produce
the bundled benchmark files with the same dimensions, class priors and
rough difficulty as the four classic diagnosis problems.  Everything is a
pure function of its seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from tgp.core import Dataset


def separable_two_class(n_inputs: int = 4, bounds=(20, 20, 20), column: int = 0, seed: int = 0) -> Dataset:
    """Targets are a thresholded copy of one input column, so a single
    terminal already classifies every row perfectly."""
    rng = np.random.default_rng(seed)
    m_total = sum(bounds)
    inputs = rng.uniform(0.0, 1.0, (m_total, n_inputs))
    targets = (inputs[:, column] > 0.5).astype(np.int64)
    return Dataset(inputs=inputs, targets=targets, n_classes=2, bounds=tuple(bounds))


def noisy_two_class(n_inputs: int = 4, bounds=(20, 20, 20), seed: int = 0, flip: float = 0.15) -> Dataset:
    """Thresholded column plus label flips: solvable in spirit but not by
    any single terminal, so the search has real work to do."""
    rng = np.random.default_rng(seed)
    m_total = sum(bounds)
    inputs = rng.uniform(0.0, 1.0, (m_total, n_inputs))
    targets = (inputs[:, 0] > 0.5).astype(np.int64)
    flips = rng.random(m_total) < flip
    targets = np.where(flips, 1 - targets, targets)
    return Dataset(inputs=inputs, targets=targets, n_classes=2, bounds=tuple(bounds))


def regression_set(n_inputs: int = 3, bounds=(30, 10, 10), seed: int = 0) -> Dataset:
    """Real-valued targets built from a smooth function of the inputs."""
    rng = np.random.default_rng(seed)
    m_total = sum(bounds)
    inputs = rng.uniform(0.0, 1.0, (m_total, n_inputs))
    targets = np.sin(inputs[:, 0]) + inputs[:, 1] * inputs[:, 2 % n_inputs]
    return Dataset(inputs=inputs, targets=targets, n_classes=0, bounds=tuple(bounds))


@dataclass(frozen=True)
class ProblemRecipe:
    """Latent-factor recipe for one benchmark-shaped problem.

    Rows get a class from ``priors`` and a latent position
    u = (class + shared noise + 0.5) / n_classes.  Continuous features are
    u plus per-feature noise, binary features threshold u, uninformative
    features are pure noise; all features land in [0, 1].  ``class_noise``
    (in units of one class step) sets the irreducible overlap and so the
    reachable error level.
    """

    n_inputs: int
    n_classes: int
    bounds: tuple[int, int, int]
    priors: tuple[float, ...]
    class_noise: float
    feature_noise: tuple[float, float]
    n_binary: int
    n_uninformative: int
    seed: int


# Dimensions and class priors follow the four classic diagnosis benchmarks
# (tumour, diabetes, heart disease, colic outcome); noise levels are tuned
# so a standard search lands near the error rates reported for them.
PROBLEM_RECIPES: dict[str, ProblemRecipe] = {
    "cancer": ProblemRecipe(
        n_inputs=9,
        n_classes=2,
        bounds=(350, 175, 174),
        priors=(0.655, 0.345),
        class_noise=0.22,
        feature_noise=(0.10, 0.45),
        n_binary=2,
        n_uninformative=1,
        seed=900_001,
    ),
    "diabetes": ProblemRecipe(
        n_inputs=8,
        n_classes=2,
        bounds=(384, 192, 192),
        priors=(0.651, 0.349),
        class_noise=0.70,
        feature_noise=(0.25, 0.80),
        n_binary=1,
        n_uninformative=2,
        seed=900_002,
    ),
    "heartc": ProblemRecipe(
        n_inputs=35,
        n_classes=2,
        bounds=(152, 76, 75),
        priors=(0.54, 0.46),
        class_noise=0.60,
        feature_noise=(0.30, 1.00),
        n_binary=18,
        n_uninformative=8,
        seed=900_003,
    ),
    "horse": ProblemRecipe(
        n_inputs=58,
        n_classes=3,
        bounds=(182, 91, 91),
        priors=(0.61, 0.24, 0.15),
        class_noise=0.68,
        feature_noise=(0.40, 1.20),
        n_binary=28,
        n_uninformative=20,
        seed=900_004,
    ),
}


def make_problem(name: str, permutation: int = 1) -> Dataset:
    """Build one benchmark-shaped dataset deterministically.

    ``permutation`` 1 keeps generation order; 2 and 3 reshuffle the same
    rows before splitting, mirroring how the original benchmark ships
    three orderings of each problem.
    """
    if name not in PROBLEM_RECIPES:
        raise KeyError(f"unknown problem {name!r}; choose from {sorted(PROBLEM_RECIPES)}")
    if permutation < 1:
        raise ValueError("permutation must be >= 1")
    r = PROBLEM_RECIPES[name]
    rng = np.random.default_rng(r.seed)
    m_total = sum(r.bounds)
    k = r.n_classes

    classes = rng.choice(k, size=m_total, p=np.asarray(r.priors) / np.sum(r.priors))
    u = (classes + rng.normal(0.0, r.class_noise, m_total) + 0.5) / k

    n_continuous = r.n_inputs - r.n_binary - r.n_uninformative
    sigmas = np.linspace(r.feature_noise[0], r.feature_noise[1], max(n_continuous, 1)) / k
    columns = []
    for i in range(n_continuous):
        columns.append(np.clip(u + rng.normal(0.0, sigmas[i], m_total), 0.0, 1.0))
    cut_lo, cut_hi = 0.5 / k, 1.0 - 0.5 / k
    for i in range(r.n_binary):
        cut = cut_lo + (cut_hi - cut_lo) * rng.random()
        noise = rng.normal(0.0, rng.uniform(*r.feature_noise) / k, m_total)
        columns.append((u + noise > cut).astype(np.float64))
    for _ in range(r.n_uninformative):
        columns.append(np.round(rng.uniform(0.0, 1.0, m_total), 6))
    inputs = np.column_stack(columns)[:, rng.permutation(r.n_inputs)]
    inputs = np.round(inputs, 6)

    if permutation > 1:
        order = np.random.default_rng(r.seed + 7919 * permutation).permutation(m_total)
        inputs, classes = inputs[order], classes[order]
    return Dataset(inputs=inputs, targets=classes.astype(np.int64), n_classes=k, bounds=r.bounds)


def write_problem_file(path, name: str, permutation: int = 1) -> Dataset:
    """Generate one problem and write it in the partitioned text format."""
    from tgp.proben import serialize_proben

    dataset = make_problem(name, permutation)
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize_proben(dataset))
    return dataset
