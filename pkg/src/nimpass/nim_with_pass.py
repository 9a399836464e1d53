"""Specialized solver for Nim with a Pass.

Nim with a Pass is ordinary Nim plus one extra move, usable once per game by
either player: skip the turn. The pass may not be taken when no ordinary move
remains, i.e. when every pile is empty.

State values are position properties, independent of any arena, so the memo
here is module level and shared across callers. It comfortably holds millions
of states; :func:`clear_cache` exists for benchmarks that want a cold start.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable

from .report import Failure, VerificationReport
from .solver import Outcome

#: Move descriptor for spending the pass (the other kind is a
#: ``(pile_index, new_size)`` tuple).
PASS_MOVE = "pass"

_StateKey = tuple[tuple[int, ...], bool]

_grundy_cache: dict[_StateKey, int] = {}


def clear_cache() -> None:
    """Drop all memoized state values."""
    _grundy_cache.clear()


@dataclass(frozen=True)
class NimPassState:
    """Pile multiset plus whether the pass is still available.

    Piles are canonicalized on construction: zeros dropped, sorted ascending.
    The pass move exists only while the piles are nonempty.
    """

    piles: tuple[int, ...] = ()
    pass_available: bool = True

    def __post_init__(self):
        canon = []
        for p in self.piles:
            if not isinstance(p, int) or p < 0:
                raise ValueError(f"pile sizes must be natural numbers, got {p!r}")
            if p:
                canon.append(p)
        canon.sort()
        object.__setattr__(self, "piles", tuple(canon))
        object.__setattr__(self, "pass_available", bool(self.pass_available))

    @property
    def has_pass_move(self) -> bool:
        return self.pass_available and bool(self.piles)


def _reduction_keys(piles: tuple[int, ...]) -> set[tuple[int, ...]]:
    """Distinct positions reachable by shrinking exactly one pile."""
    out = set()
    for i, size in enumerate(piles):
        rest = piles[:i] + piles[i + 1 :]
        out.add(rest)
        for w in range(1, size):
            out.add(tuple(sorted(rest + (w,))))
    return out


def np_grundy(state: NimPassState) -> int:
    """Grundy value of a Nim-with-a-Pass state.

    Computed as the mex over all pile-reduction successors plus, while the
    pass move exists, the same piles with the pass spent. Pass-spent states
    are plain Nim, where the value is the nim-sum of the piles (the recursive
    definition agrees; the shortcut is cross-checked in the test suite).
    Iterative, so deep states cannot overflow the call stack.
    """
    key = (state.piles, state.pass_available)
    cache = _grundy_cache
    got = cache.get(key)
    if got is not None:
        return got
    stack = [key]
    while stack:
        cur = stack[-1]
        if cur in cache:
            stack.pop()
            continue
        piles, flag = cur
        if not flag:
            v = 0
            for p in piles:
                v ^= p
            cache[cur] = v
            stack.pop()
            continue
        if not piles:
            cache[cur] = 0
            stack.pop()
            continue
        succ: list[_StateKey] = [(s, True) for s in _reduction_keys(piles)]
        succ.append((piles, False))
        pending = [s for s in succ if s not in cache]
        if pending:
            stack.extend(pending)
            continue
        seen = {cache[s] for s in succ}
        m = 0
        while m in seen:
            m += 1
        cache[cur] = m
        stack.pop()
    return cache[key]


def np_outcome(state: NimPassState) -> Outcome:
    """P exactly when :func:`np_grundy` is 0."""
    return Outcome.P if np_grundy(state) == 0 else Outcome.N


def np_winning_moves(state: NimPassState) -> list[tuple[object, NimPassState]]:
    """All moves to P-positions, as ``(descriptor, successor)`` pairs.

    A descriptor is either ``(pile_index, new_size)`` with the index taken in
    the sorted pile tuple, or :data:`PASS_MOVE`. Empty exactly when the state
    is a P-position (or has no moves at all).
    """
    moves: list[tuple[object, NimPassState]] = []
    piles = state.piles
    for i, size in enumerate(piles):
        for w in range(size):
            nxt = NimPassState(piles[:i] + (w,) + piles[i + 1 :], state.pass_available)
            if np_grundy(nxt) == 0:
                moves.append(((i, w), nxt))
    if state.has_pass_move:
        nxt = NimPassState(piles, False)
        if np_grundy(nxt) == 0:
            moves.append((PASS_MOVE, nxt))
    return moves


@dataclass(frozen=True)
class GrundyTable:
    """Two-pile table of pass-available Grundy values.

    ``entries`` maps ``(a, b)`` with ``a <= b <= max`` to the value of the
    two-pile state; :meth:`value` extends the table symmetrically.
    """

    max: int
    entries: dict[tuple[int, int], int]

    def value(self, a: int, b: int) -> int:
        if a > b:
            a, b = b, a
        return self.entries[(a, b)]

    def p_positions(self) -> list[tuple[int, int]]:
        """Sorted pairs with value 0."""
        return sorted(k for k, v in self.entries.items() if v == 0)


def two_pile_table(max: int) -> GrundyTable:
    """Grundy values of all two-pile states ``(a, b)`` with ``a <= b <= max``."""
    if max < 0:
        raise ValueError("max must be a natural number")
    entries = {}
    for a in range(max + 1):
        for b in range(a, max + 1):
            entries[(a, b)] = np_grundy(NimPassState((a, b)))
    return GrundyTable(max=max, entries=entries)


def three_pile_ppos_ner(max: int) -> set[tuple[int, int, int]]:
    """Three-pile P-positions derived from the two-pile table.

    Extending a position by the nimber matching its Grundy value produces a
    loss, so each pair ``(a, b)`` with ``a <= b <= max`` contributes exactly
    the sorted triple ``(a, b, value(a, b))``. Third coordinates are table
    values and may exceed ``max``.
    """
    table = two_pile_table(max)
    return {
        tuple(sorted((a, b, c)))  # type: ignore[misc]
        for (a, b), c in table.entries.items()
    }


def three_pile_ppos_direct(max: int) -> set[tuple[int, int, int]]:
    """Three-pile P-positions inside the cube, found by direct evaluation."""
    if max < 0:
        raise ValueError("max must be a natural number")
    out = set()
    for triple in combinations_with_replacement(range(max + 1), 3):
        if np_grundy(NimPassState(triple)) == 0:
            out.add(triple)
    return out


def cross_check_three_pile(max: int) -> VerificationReport:
    """Compare the table-derived P-positions against direct evaluation.

    Both sides are computed independently and compared on the cube of triples
    with every coordinate at most ``max``. Discrepancies become report
    failures, not exceptions.
    """
    start = time.perf_counter()
    ner = {t for t in three_pile_ppos_ner(max) if t[-1] <= max}
    direct = three_pile_ppos_direct(max)
    failures = []
    for triple in sorted(ner - direct):
        failures.append(
            Failure(
                inputs={"position": "pass(nim(%d,%d,%d))" % triple},
                expected="P (derived from the two-pile table)",
                actual="N (direct evaluation)",
            )
        )
    for triple in sorted(direct - ner):
        failures.append(
            Failure(
                inputs={"position": "pass(nim(%d,%d,%d))" % triple},
                expected="N (absent from the table-derived set)",
                actual="P (direct evaluation)",
            )
        )
    return VerificationReport(
        theorem="three_pile_cross_check",
        mode="exhaustive",
        cases=len(ner | direct),
        failures=failures,
        elapsed_ms=int((time.perf_counter() - start) * 1000),
    )
