"""Grundy values, outcomes and winning moves for interned forms."""

from __future__ import annotations

import enum
from typing import Iterable

from .arena import Arena, GameId


class Outcome(enum.Enum):
    """Normal-play status: P means the previous player wins, N the next."""

    P = "P"
    N = "N"

    def __str__(self) -> str:
        return self.value


def mex(values: Iterable[int]) -> int:
    """Least natural number absent from ``values``."""
    seen = set(values)
    m = 0
    while m in seen:
        m += 1
    return m


def _grundy_table(arena: Arena) -> list[int]:
    table = arena.caches.get("grundy_values")
    if table is None:
        table = arena.caches["grundy_values"] = []
    if len(table) < len(arena):
        table.extend([-1] * (len(arena) - len(table)))
    return table


def grundy(arena: Arena, game: GameId) -> int:
    """Grundy value: the mex of the option values, memoized per arena.

    Evaluated post-order with an explicit work stack over the form DAG, so
    arbitrarily tall DAGs never hit the interpreter recursion limit. The memo
    is a dense array indexed by handle.
    """
    arena.options(game)
    table = _grundy_table(arena)
    if table[game] >= 0:
        return table[game]
    nodes = arena.nodes
    stack = [game]
    while stack:
        cur = stack[-1]
        if table[cur] >= 0:
            stack.pop()
            continue
        opts = nodes[cur]
        pending = [o for o in opts if table[o] < 0]
        if pending:
            stack.extend(pending)
            continue
        seen = {table[o] for o in opts}
        m = 0
        while m in seen:
            m += 1
        table[cur] = m
        stack.pop()
    return table[game]


def outcome(arena: Arena, game: GameId) -> Outcome:
    """P exactly when the Grundy value is 0."""
    return Outcome.P if grundy(arena, game) == 0 else Outcome.N


def winning_moves(arena: Arena, game: GameId) -> list[GameId]:
    """Options with Grundy value 0; empty exactly when ``game`` is a P-position."""
    return [o for o in arena.options(game) if grundy(arena, o) == 0]


def equal_values(arena: Arena, left: GameId, right: GameId) -> bool:
    """Whether the two games have equal value, i.e. equal Grundy numbers."""
    return grundy(arena, left) == grundy(arena, right)
