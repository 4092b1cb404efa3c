"""Domain types, protected arithmetic and fitness functions.

Individuals are plain vectors of evaluated outputs (one gene per fitness
case); nothing here ever builds or walks an expression tree.  All symbol
applications go through :func:`protected_apply` so that genes stay finite
no matter what the evolutionary search produces.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

# Closure guards.  Benchmark inputs live in [0, 1], so these thresholds
# are far outside any value a sane expression produces; they only exist to
# keep degenerate lineages finite.
DIV_GUARD = 1e-12
EXP_ARG_LIMIT = 80.0
GENE_LIMIT = 1e150


class FunctionSymbol(enum.Enum):
    """An operator usable by crossover; the value doubles as its print token."""

    ADD = "+"
    SUB = "-"
    MUL = "*"
    DIV = "/"
    SIN = "sin"
    EXP = "exp"

    @property
    def arity(self) -> int:
        return 1 if self in (FunctionSymbol.SIN, FunctionSymbol.EXP) else 2


DEFAULT_FUNCTION_SET: tuple[FunctionSymbol, ...] = (
    FunctionSymbol.ADD,
    FunctionSymbol.SUB,
    FunctionSymbol.MUL,
    FunctionSymbol.DIV,
    FunctionSymbol.SIN,
    FunctionSymbol.EXP,
)

# Diagnostic counter: number of elementwise symbol applications performed.
# Incremented by protected_apply, read by the decode-cost checks.  Not
# synchronised across threads; parallel experiment runs use separate
# processes, so each keeps its own count.
_apply_count = 0


def apply_count() -> int:
    return _apply_count


def reset_apply_count() -> None:
    global _apply_count
    _apply_count = 0


def protected_apply(symbol: FunctionSymbol, *args):
    """Apply ``symbol`` to scalars or elementwise to equal-length vectors.

    Closure rules: division by a denominator smaller than ``DIV_GUARD`` in
    magnitude yields 1.0, exp arguments are clamped to ±``EXP_ARG_LIMIT``,
    any non-finite result becomes 0.0, and magnitudes are capped at
    ±``GENE_LIMIT``.  Scalars in, scalar out; arrays in, array out.

    Uses numpy ufuncs even for scalars: the vectorised engine and the
    one-value-at-a-time trace replay must agree bitwise, and libm's exp is
    not bitwise-identical to numpy's.
    """
    global _apply_count
    if len(args) != symbol.arity:
        raise TypeError(f"{symbol.name} takes {symbol.arity} argument(s), got {len(args)}")
    a = np.asarray(args[0], dtype=np.float64)
    with np.errstate(all="ignore"):
        if symbol is FunctionSymbol.ADD:
            out = a + np.asarray(args[1], dtype=np.float64)
        elif symbol is FunctionSymbol.SUB:
            out = a - np.asarray(args[1], dtype=np.float64)
        elif symbol is FunctionSymbol.MUL:
            out = a * np.asarray(args[1], dtype=np.float64)
        elif symbol is FunctionSymbol.DIV:
            b = np.asarray(args[1], dtype=np.float64)
            small = np.abs(b) < DIV_GUARD
            out = np.where(small, 1.0, a / np.where(small, 1.0, b))
        elif symbol is FunctionSymbol.SIN:
            out = np.sin(a)
        else:
            out = np.exp(np.clip(a, -EXP_ARG_LIMIT, EXP_ARG_LIMIT))
    out = np.asarray(out)
    _apply_count += out.size
    out = np.where(np.isfinite(out), out, 0.0)
    out = np.clip(out, -GENE_LIMIT, GENE_LIMIT)
    if out.ndim == 0:
        return float(out)
    return out


def classify_gene(value: float, n_classes: int) -> int:
    """Nearest class index for one gene value; ties go to the lower class.

    Classes are the integers 0 … n_classes-1, so the nearest-class argmin
    reduces to ceil(value - 0.5) clamped into range (the subtraction is
    exact for every double that matters, which keeps the tie rule exact).
    """
    k = math.ceil(value - 0.5)
    if k < 0:
        return 0
    if k >= n_classes:
        return n_classes - 1
    return k


def classify_genes(values: np.ndarray, n_classes: int) -> np.ndarray:
    """Vectorised :func:`classify_gene` over a gene slice."""
    k = np.ceil(np.asarray(values, dtype=np.float64) - 0.5)
    return np.clip(k, 0, n_classes - 1).astype(np.int64)


def classification_fitness(genes, targets, n_classes: int) -> int:
    """Number of rows whose nearest class differs from the target class."""
    genes = np.asarray(genes, dtype=np.float64)
    targets = np.asarray(targets)
    if genes.shape != targets.shape:
        raise ValueError(f"genes/targets length mismatch: {genes.shape} vs {targets.shape}")
    return int(np.count_nonzero(classify_genes(genes, n_classes) != targets))


def regression_fitness(genes, targets) -> float:
    """Sum of absolute errors between genes and real-valued targets."""
    genes = np.asarray(genes, dtype=np.float64)
    targets = np.asarray(targets, dtype=np.float64)
    if genes.shape != targets.shape:
        raise ValueError(f"genes/targets length mismatch: {genes.shape} vs {targets.shape}")
    return float(np.sum(np.abs(targets - genes)))


def _frozen(array: np.ndarray) -> np.ndarray:
    out = np.array(array, dtype=np.float64, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class Dataset:
    """Partitioned fitness-case matrix.

    Rows are ordered training, then validation, then test; ``bounds`` holds
    the three partition sizes.  ``n_classes`` is at least 2 for
    classification and exactly 0 for regression, in which case ``targets``
    holds real values instead of class indices.
    """

    inputs: np.ndarray
    targets: np.ndarray
    n_classes: int
    bounds: tuple[int, int, int]

    def __post_init__(self):
        inputs = _frozen(np.atleast_2d(self.inputs))
        if not np.isfinite(inputs).all():
            raise ValueError("dataset inputs must be finite")
        m_total, n = inputs.shape
        if n < 1:
            raise ValueError("dataset needs at least one input column")
        if len(self.bounds) != 3 or any(int(b) < 1 for b in self.bounds):
            raise ValueError(f"partition sizes must each be >= 1, got {self.bounds}")
        bounds = tuple(int(b) for b in self.bounds)
        if sum(bounds) != m_total:
            raise ValueError(f"partition sizes {bounds} do not sum to {m_total} rows")
        if self.n_classes == 0:
            targets = _frozen(np.asarray(self.targets, dtype=np.float64))
            if not np.isfinite(targets).all():
                raise ValueError("regression targets must be finite")
        elif self.n_classes >= 2:
            targets = np.array(self.targets, dtype=np.int64, copy=True)
            if targets.min(initial=0) < 0 or targets.max(initial=0) >= self.n_classes:
                raise ValueError(f"class targets must lie in [0, {self.n_classes - 1}]")
            targets.setflags(write=False)
        else:
            raise ValueError("n_classes must be 0 (regression) or >= 2")
        if targets.shape != (m_total,):
            raise ValueError(f"expected {m_total} targets, got {targets.shape}")
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "targets", targets)
        object.__setattr__(self, "bounds", bounds)

    @property
    def n_inputs(self) -> int:
        return self.inputs.shape[1]

    @property
    def m_total(self) -> int:
        return self.inputs.shape[0]

    @property
    def m_train(self) -> int:
        return self.bounds[0]

    @property
    def m_val(self) -> int:
        return self.bounds[1]

    @property
    def m_test(self) -> int:
        return self.bounds[2]

    @property
    def task(self) -> str:
        return "regress" if self.n_classes == 0 else "classify"

    def partition_slice(self, part: str) -> slice:
        m_train, m_val, _ = self.bounds
        if part == "train":
            return slice(0, m_train)
        if part == "val":
            return slice(m_train, m_train + m_val)
        if part == "test":
            return slice(m_train + m_val, self.m_total)
        raise ValueError(f"unknown partition {part!r}")


def datasets_equal(a: Dataset, b: Dataset) -> bool:
    return (
        a.n_classes == b.n_classes
        and a.bounds == b.bounds
        and np.array_equal(a.inputs, b.inputs)
        and np.array_equal(a.targets, b.targets)
    )


def training_fitness(genes: np.ndarray, dataset: Dataset) -> float:
    """Fitness of a gene vector on the training slice only."""
    return partition_errors(genes, dataset, "train")


def partition_errors(genes: np.ndarray, dataset: Dataset, part: str) -> float:
    """Error measure of a gene vector restricted to one partition.

    Misclassification count for classification, sum of absolute errors for
    regression; either way smaller is better.
    """
    sl = dataset.partition_slice(part)
    genes = np.asarray(genes, dtype=np.float64)
    if genes.shape != (dataset.m_total,):
        raise ValueError(f"expected {dataset.m_total} genes, got {genes.shape}")
    if dataset.task == "classify":
        return classification_fitness(genes[sl], dataset.targets[sl], dataset.n_classes)
    return regression_fitness(genes[sl], dataset.targets[sl])


@dataclass(eq=False)
class Individual:
    """One evolved output vector: genes[k] is the value on fitness case k.

    The expression that produced the genes is not stored; ``trace_id``
    points into a genealogy arena when tracing is switched on.
    """

    genes: np.ndarray
    train_fitness: float
    trace_id: int | None = None


@dataclass(frozen=True)
class TgpParams:
    """Search parameters.  Defaults follow the benchmark configuration."""

    population_size: int = 500
    generations: int = 1000
    p_insert: float = 0.2
    function_set: tuple[FunctionSymbol, ...] = DEFAULT_FUNCTION_SET
    seed: int = 0
    runs: int = 30

    def __post_init__(self):
        if self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        if self.generations < 1:
            raise ValueError("generations must be >= 1")
        if not 0.0 <= self.p_insert <= 1.0:
            raise ValueError("p_insert must lie in [0, 1]")
        if not self.function_set:
            raise ValueError("function_set must not be empty")
        object.__setattr__(self, "function_set", tuple(self.function_set))
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.runs < 1:
            raise ValueError("runs must be >= 1")
