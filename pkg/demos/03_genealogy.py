"""Proving the vectors are real programs: the genealogy oracle.

With tracing on, the engine records which operator produced which
individual.  Replaying that record must reproduce every gene exactly,
bit for bit; and the champion can be printed as a formula.
"""

from tgp.core import TgpParams
from tgp.evolve import run
from tgp.synthetic import noisy_two_class
from tgp.trace import TraceArena, evaluate_trace_rows, export_expression

dataset = noisy_two_class(n_inputs=4, bounds=(40, 20, 20), seed=11, flip=0.2)
arena = TraceArena()
result = run(dataset, TgpParams(population_size=60, generations=120, seed=3), trace=arena)

print(f"arena holds {len(arena)} nodes after the run")

replayed = evaluate_trace_rows(arena, result.champion_trace_id, dataset.inputs)
exact = replayed.tobytes() == result.champion_genes.tobytes()
print(f"champion replay bitwise identical: {exact}")

formula = export_expression(arena, result.champion_trace_id)
if len(formula) > 200:
    formula = formula[:200] + f"... ({len(formula)} chars)"
print(f"\nchampion as a formula:\n  {formula}")

# the same run without tracing produces the same champion, cheaper
untraced = run(dataset, TgpParams(population_size=60, generations=120, seed=3))
print(f"\nuntraced rerun matches: "
      f"{untraced.champion_genes.tobytes() == result.champion_genes.tobytes()}")
