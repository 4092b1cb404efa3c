"""One evolutionary run, from raw dataset to reported test error.

Individuals here are only their outputs: a vector with one float per
dataset row.  Initial individuals copy single input columns; crossover
applies one operator across two parents' vectors; nothing ever stores an
expression.
"""

from tgp.core import TgpParams
from tgp.evolve import run
from tgp.synthetic import noisy_two_class

dataset = noisy_two_class(n_inputs=4, bounds=(40, 20, 20), seed=11, flip=0.2)
print(f"dataset: {dataset.n_inputs} inputs, {dataset.m_total} rows "
      f"split {dataset.bounds}, {dataset.n_classes} classes")

params = TgpParams(population_size=60, generations=120, seed=3)
result = run(dataset, params)

print(f"\nbest training fitness by generation (sampled):")
for gen in (1, 5, 20, 60, 120):
    train, val = result.per_generation_log[gen - 1]
    print(f"  gen {gen:>4}: train errors {train:>4.0f}   validation errors {val:>4.0f}")

print(f"\nchampion: picked at generation {result.champion_generation} "
      f"with {result.champion_validation_errors:.0f} validation errors")
print(f"test errors: {result.champion_test_errors:.0f} of {dataset.m_test} "
      f"({100 * result.champion_test_errors / dataset.m_test:.1f}%)")
print(f"\nthe champion is just numbers, first five genes: "
      f"{[float(round(g, 4)) for g in result.champion_genes[:5]]}")
