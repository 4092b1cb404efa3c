"""Traceless genetic programming: populations of evaluated output vectors.

Individuals store only the value their (never-materialised) expression
takes on every fitness case.  Crossover combines whole gene vectors
elementwise, so evaluating an offspring costs one pass over the cases
regardless of how complex its ancestry is.
"""

from tgp.core import (
    DEFAULT_FUNCTION_SET,
    Dataset,
    FunctionSymbol,
    Individual,
    TgpParams,
    classification_fitness,
    classify_gene,
    datasets_equal,
    partition_errors,
    protected_apply,
    regression_fitness,
)
from tgp.evolve import (
    RunResult,
    binary_tournament,
    crossover,
    evolve_generation,
    init_population,
    insertion,
    make_terminal_individual,
    run,
)
from tgp.experiment import ExperimentReport, aggregate_stats, emit_report, run_experiment
from tgp.proben import (
    parse_proben,
    parse_proben_file,
    serialize_proben,
    validate_against_table1,
)
from tgp.trace import TraceArena, evaluate_trace, evaluate_trace_rows, export_expression

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_FUNCTION_SET",
    "Dataset",
    "ExperimentReport",
    "FunctionSymbol",
    "Individual",
    "RunResult",
    "TgpParams",
    "TraceArena",
    "aggregate_stats",
    "binary_tournament",
    "classification_fitness",
    "classify_gene",
    "crossover",
    "datasets_equal",
    "emit_report",
    "evaluate_trace",
    "evaluate_trace_rows",
    "evolve_generation",
    "export_expression",
    "init_population",
    "insertion",
    "make_terminal_individual",
    "parse_proben",
    "parse_proben_file",
    "partition_errors",
    "protected_apply",
    "regression_fitness",
    "run",
    "run_experiment",
    "serialize_proben",
    "validate_against_table1",
]
