"""Optional genealogy of the expressions behind gene vectors.

The engine never needs this: it exists so tests can prove that every gene
vector really is the evaluation of some expression, and so champions can
be printed as formulas.  Nodes live in one append-only arena; crossover
children reference their parents' nodes by id, so shared subexpressions
are stored once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from tgp.core import FunctionSymbol, protected_apply

_INFIX = {FunctionSymbol.ADD, FunctionSymbol.SUB, FunctionSymbol.MUL, FunctionSymbol.DIV}


@dataclass(frozen=True)
class Terminal:
    """Leaf node: input column ``column``."""

    column: int


@dataclass(frozen=True)
class Apply:
    """Operator node over earlier arena entries."""

    symbol: FunctionSymbol
    children: tuple[int, ...]


class TraceArena:
    """Append-only node store; a node id is its list position."""

    def __init__(self):
        self._nodes: list[Terminal | Apply] = []

    def __len__(self) -> int:
        return len(self._nodes)

    def node(self, node_id: int) -> Terminal | Apply:
        return self._nodes[node_id]

    def record_terminal(self, column: int) -> int:
        self._nodes.append(Terminal(column))
        return len(self._nodes) - 1

    def record_apply(self, symbol: FunctionSymbol, child_ids: list[int | None]) -> int:
        if len(child_ids) != symbol.arity:
            raise TypeError(f"{symbol.name} needs {symbol.arity} child(ren), got {len(child_ids)}")
        checked = []
        for child in child_ids:
            if child is None or not 0 <= child < len(self._nodes):
                raise ValueError(f"invalid child id {child!r}")
            checked.append(int(child))
        self._nodes.append(Apply(symbol, tuple(checked)))
        return len(self._nodes) - 1


def _postorder_values(arena: TraceArena, node_id: int, leaf):
    """Evaluate bottom-up with an explicit stack; lineages get deep enough
    that recursion would overflow.  ``leaf`` maps a Terminal to its value."""
    memo = {}
    stack = [node_id]
    while stack:
        nid = stack.pop()
        if nid in memo:
            continue
        node = arena.node(nid)
        if isinstance(node, Terminal):
            memo[nid] = leaf(node)
            continue
        pending = [c for c in node.children if c not in memo]
        if pending:
            stack.append(nid)
            stack.extend(pending)
        else:
            memo[nid] = protected_apply(node.symbol, *(memo[c] for c in node.children))
    return memo[node_id]


def evaluate_trace(arena: TraceArena, node_id: int, row) -> float:
    """Evaluate the expression at ``node_id`` on one input row.

    Uses the same protected rules and the same left-to-right argument order
    as the engine, so a replayed gene matches the stored one bitwise.
    """
    row = np.asarray(row, dtype=np.float64)
    return float(_postorder_values(arena, node_id, lambda t: float(row[t.column])))


def evaluate_trace_rows(arena: TraceArena, node_id: int, inputs) -> np.ndarray:
    """Evaluate on every row of an input matrix at once.

    This replays exactly the vectorised operations the engine performed, so
    on the full dataset matrix it reproduces an individual's gene vector
    bit for bit in one pass.
    """
    inputs = np.asarray(inputs, dtype=np.float64)
    # contiguous copies mirror the engine's terminal individuals exactly
    out = _postorder_values(arena, node_id, lambda t: np.ascontiguousarray(inputs[:, t.column]))
    return np.array(out, dtype=np.float64, copy=True)


def export_expression(arena: TraceArena, node_id: int) -> str:
    """Fully parenthesised text for the expression at ``node_id``.

    Terminals print as ``x0`` … ``x(n-1)``, binary operators infix, unary
    ones as function calls: ``(x3 + sin(x1))``.
    """
    memo: dict[int, str] = {}
    stack = [node_id]
    while stack:
        nid = stack.pop()
        if nid in memo:
            continue
        node = arena.node(nid)
        if isinstance(node, Terminal):
            memo[nid] = f"x{node.column}"
            continue
        pending = [c for c in node.children if c not in memo]
        if pending:
            stack.append(nid)
            stack.extend(pending)
        elif node.symbol in _INFIX:
            left, right = (memo[c] for c in node.children)
            memo[nid] = f"({left} {node.symbol.value} {right})"
        else:
            memo[nid] = f"{node.symbol.value}({memo[node.children[0]]})"
    return memo[node_id]
