"""A tour of the arithmetic the search is allowed to use.

Every operator is protected: whatever the inputs, the result is a finite
float of bounded magnitude.  That property is what keeps a population of
raw output vectors meaningful over thousands of generations.
"""

import numpy as np

from tgp.core import (
    DEFAULT_FUNCTION_SET,
    EXP_ARG_LIMIT,
    GENE_LIMIT,
    FunctionSymbol,
    classify_gene,
    protected_apply,
)

print("function set:")
for symbol in DEFAULT_FUNCTION_SET:
    print(f"  {symbol.value:>3}  arity {symbol.arity}")

print("\nordinary arithmetic is just arithmetic:")
print("  0.3 + 0.4 =", protected_apply(FunctionSymbol.ADD, 0.3, 0.4))
print("  sin(1.0)  =", protected_apply(FunctionSymbol.SIN, 1.0))

print("\nthe guards kick in only on degenerate cases:")
print("  5 / 0          =", protected_apply(FunctionSymbol.DIV, 5.0, 0.0), "(division guard)")
print(f"  exp(1000)      = {protected_apply(FunctionSymbol.EXP, 1000.0):.6g}",
      f"(argument clamped to {EXP_ARG_LIMIT})")
huge = protected_apply(FunctionSymbol.MUL, 1e200, 1e100)
print(f"  1e200 * 1e100  = {huge:.6g} (magnitude capped at {GENE_LIMIT:g})")
print("  1e308 + 1e308  =", protected_apply(FunctionSymbol.ADD, 1e308, 1e308), "(overflow becomes 0)")

print("\nvectors work elementwise, same rules:")
a = np.array([0.5, 2.0, 1e308])
b = np.array([0.0, 4.0, 1e308])
print("  a / b =", protected_apply(FunctionSymbol.DIV, a, b))

print("\na gene value turns into a class by nearest integer, ties down:")
for value in (0.3, 0.5, 0.51, 1.7, -2.0, 9.0):
    print(f"  classify_gene({value:>5}, n_classes=3) = {classify_gene(value, 3)}")
