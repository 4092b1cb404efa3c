"""Generational search over output-vector individuals.

Initialisation seeds the population with single input columns, crossover
combines whole gene vectors elementwise, insertion re-injects fresh
columns, and a one-slot elite plus binary tournaments drive selection.
Early stopping picks the champion by validation error.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from tgp.core import (
    Dataset,
    FunctionSymbol,
    Individual,
    TgpParams,
    partition_errors,
    protected_apply,
    training_fitness,
)
from tgp.trace import TraceArena


def make_rng(seed: int) -> np.random.Generator:
    """The engine's RNG: PCG64, so seeded runs replay bitwise anywhere."""
    return np.random.Generator(np.random.PCG64(seed))


@dataclass(frozen=True, eq=False)
class RunResult:
    """Outcome of one seeded run.

    ``champion_*`` describe the individual with the lowest validation error
    seen across all generations; the log keeps one
    (best training fitness, validation errors of that best) pair per
    generation.
    """

    champion_genes: np.ndarray
    champion_generation: int
    champion_validation_errors: float
    champion_test_errors: float
    per_generation_log: tuple[tuple[float, float], ...]
    seed: int
    champion_trace_id: int | None = None


def make_terminal_individual(dataset: Dataset, j: int, trace: TraceArena | None = None) -> Individual:
    """Individual whose expression is just input column ``j``.

    Genes copy the column across all partitions; fitness is computed on the
    training slice only.
    """
    if not 0 <= j < dataset.n_inputs:
        raise IndexError(f"column {j} out of range for {dataset.n_inputs} inputs")
    genes = np.ascontiguousarray(dataset.inputs[:, j])
    genes.setflags(write=False)
    trace_id = trace.record_terminal(j) if trace is not None else None
    return Individual(genes=genes, train_fitness=training_fitness(genes, dataset), trace_id=trace_id)


def init_population(
    dataset: Dataset,
    params: TgpParams,
    rng: np.random.Generator,
    trace: TraceArena | None = None,
) -> list[Individual]:
    """Population of single-column individuals, columns drawn uniformly."""
    return [
        make_terminal_individual(dataset, int(rng.integers(dataset.n_inputs)), trace)
        for _ in range(params.population_size)
    ]


def binary_tournament(population: list[Individual], rng: np.random.Generator) -> int:
    """Draw two indices with replacement; lower training fitness wins, the
    first draw wins ties."""
    draws = rng.integers(0, len(population), size=2)
    i, j = int(draws[0]), int(draws[1])
    return i if population[i].train_fitness <= population[j].train_fitness else j


def crossover(
    dataset: Dataset,
    symbol: FunctionSymbol,
    parents: list[Individual],
    trace: TraceArena | None = None,
) -> Individual:
    """Offspring whose genes apply ``symbol`` position-by-position across
    the parents' gene vectors (validation and test positions included)."""
    if len(parents) != symbol.arity:
        raise TypeError(f"{symbol.name} needs {symbol.arity} parent(s), got {len(parents)}")
    genes = protected_apply(symbol, *(p.genes for p in parents))
    genes.setflags(write=False)
    trace_id = None
    if trace is not None:
        trace_id = trace.record_apply(symbol, [p.trace_id for p in parents])
    return Individual(genes=genes, train_fitness=training_fitness(genes, dataset), trace_id=trace_id)


def insertion(dataset: Dataset, rng: np.random.Generator, trace: TraceArena | None = None) -> Individual:
    """Fresh single-column individual with a uniformly random column."""
    return make_terminal_individual(dataset, int(rng.integers(dataset.n_inputs)), trace)


def best_index(population: list[Individual]) -> int:
    """Index of the lowest training fitness; ties go to the lowest index."""
    best = 0
    best_fit = population[0].train_fitness
    for i in range(1, len(population)):
        if population[i].train_fitness < best_fit:
            best, best_fit = i, population[i].train_fitness
    return best


def evolve_generation(
    population: list[Individual],
    dataset: Dataset,
    params: TgpParams,
    rng: np.random.Generator,
    trace: TraceArena | None = None,
) -> list[Individual]:
    """One generational step: elite copy in slot 0, then each remaining
    slot is an insertion with probability ``p_insert``, otherwise a
    crossover with a uniformly drawn symbol and one tournament per parent.
    """
    if len(population) != params.population_size:
        raise ValueError("population size does not match params.population_size")
    elite = population[best_index(population)]
    new_population = [Individual(elite.genes, elite.train_fitness, elite.trace_id)]
    n_symbols = len(params.function_set)
    while len(new_population) < params.population_size:
        if rng.random() < params.p_insert:
            new_population.append(insertion(dataset, rng, trace))
        else:
            symbol = params.function_set[int(rng.integers(n_symbols))]
            parents = [population[binary_tournament(population, rng)] for _ in range(symbol.arity)]
            new_population.append(crossover(dataset, symbol, parents, trace))
    return new_population


def run(
    dataset: Dataset,
    params: TgpParams,
    seed: int | None = None,
    trace: TraceArena | None = None,
) -> RunResult:
    """Full seeded run with early stopping on the validation partition.

    After every generation the best-by-training individual is scored on the
    validation slice; the champion is the first individual to reach the
    lowest validation error seen, and its test error is computed once at
    the end from its stored genes.
    """
    if seed is None:
        seed = params.seed
    rng = make_rng(seed)
    population = init_population(dataset, params, rng, trace)
    log: list[tuple[float, float]] = []
    champion = None
    champion_val = np.inf
    champion_gen = 0
    for gen in range(1, params.generations + 1):
        population = evolve_generation(population, dataset, params, rng, trace)
        best = population[best_index(population)]
        val_errors = partition_errors(best.genes, dataset, "val")
        log.append((best.train_fitness, val_errors))
        if val_errors < champion_val:
            champion, champion_val, champion_gen = best, val_errors, gen
    test_errors = partition_errors(champion.genes, dataset, "test")
    return RunResult(
        champion_genes=champion.genes,
        champion_generation=champion_gen,
        champion_validation_errors=champion_val,
        champion_test_errors=test_errors,
        per_generation_log=tuple(log),
        seed=seed,
        champion_trace_id=champion.trace_id,
    )
