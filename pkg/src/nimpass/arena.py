"""Interned impartial game forms.

An :class:`Arena` stores every game form constructed during a session as an
immutable node holding a sorted, deduplicated tuple of option handles.
Interning makes structural identity cheap: two handles are equal exactly when
the forms have identical option sets. Handles are assigned in construction
order, so every option's handle is strictly smaller than its owner's handle
and the arena is always a topologically ordered DAG.

Handles are session local. Never persist them or compare them across arenas;
compare Grundy values or printed expressions instead.

Concurrency: construction requires exclusive access to the arena (single
writer). Nodes are immutable once interned and may be read from any thread.
"""

from __future__ import annotations

from typing import Any, Iterable

GameId = int

#: Handle of the empty game (the unique form with no options).
EMPTY: GameId = 0

DEFAULT_NODE_LIMIT = 50_000_000


class ResourceLimitError(RuntimeError):
    """A construction would exceed the arena's node budget."""


class UnknownGameIdError(ValueError):
    """A handle does not name a form interned in this arena."""


class Arena:
    """Intern table for impartial game forms.

    The empty game is pre-interned with handle 0. ``node_limit`` caps the
    total number of interned forms; constructions that would exceed it raise
    :class:`ResourceLimitError` instead of exhausting memory.
    """

    def __init__(self, node_limit: int = DEFAULT_NODE_LIMIT):
        if node_limit < 1:
            raise ValueError("node_limit must be at least 1")
        self.node_limit = node_limit
        self._nodes: list[tuple[GameId, ...]] = [()]
        self._ids: dict[tuple[GameId, ...], GameId] = {(): EMPTY}
        self._birthdays: list[int] = [0]
        # Constructor bookkeeping, also used to pretty-print handles.
        self._nimber_ids: list[GameId] = [EMPTY]  # index n -> handle of *n
        self._nimber_of: dict[GameId, int] = {EMPTY: 0}
        self._nim_ids: dict[tuple[int, ...], GameId] = {(): EMPTY}
        self._nim_piles: dict[GameId, tuple[int, ...]] = {EMPTY: ()}
        self._sum_memo: dict[tuple[GameId, GameId], GameId] = {}
        #: Per-arena memo storage for derived computations (operators,
        #: solver, analyses). Keyed by computation name; values are owned by
        #: the computing module.
        self.caches: dict[str, Any] = {}

    def __len__(self) -> int:
        return len(self._nodes)

    def __repr__(self) -> str:
        return f"<Arena nodes={len(self._nodes)}>"

    @property
    def nodes(self) -> list[tuple[GameId, ...]]:
        """The interned option tuples, indexed by handle. Read only."""
        return self._nodes

    def cache(self, name: str) -> dict:
        """Return (creating on demand) the memo dict registered under ``name``."""
        try:
            return self.caches[name]
        except KeyError:
            fresh: dict = {}
            self.caches[name] = fresh
            return fresh

    def _check_id(self, game: GameId) -> None:
        if not isinstance(game, int) or not 0 <= game < len(self._nodes):
            raise UnknownGameIdError(f"unknown game id {game!r}")

    def _intern(self, options: tuple[GameId, ...]) -> GameId:
        """Intern a sorted, deduplicated option tuple of known-valid handles."""
        got = self._ids.get(options)
        if got is not None:
            return got
        if len(self._nodes) >= self.node_limit:
            raise ResourceLimitError(
                f"arena node limit of {self.node_limit} reached"
            )
        gid = len(self._nodes)
        self._nodes.append(options)
        self._ids[options] = gid
        return gid

    def mk_game(self, options: Iterable[GameId]) -> GameId:
        """Intern the form whose option set is ``options``.

        Options are deduplicated and stored sorted; the same set always yields
        the same handle. The empty set yields :data:`EMPTY`.
        """
        opts = tuple(sorted(set(options)))
        size = len(self._nodes)
        for o in opts:
            if not isinstance(o, int) or not 0 <= o < size:
                raise UnknownGameIdError(f"unknown game id {o!r} in options")
        return self._intern(opts)

    def empty(self) -> GameId:
        """Handle of the empty game."""
        return EMPTY

    def options(self, game: GameId) -> tuple[GameId, ...]:
        """The option handles of ``game``, sorted ascending."""
        self._check_id(game)
        return self._nodes[game]

    def nimber(self, n: int) -> GameId:
        """Handle of the one-pile Nim game with ``n`` stones.

        Its options are exactly the smaller nimbers; ``nimber(0)`` is the
        empty game.
        """
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"nimber index must be a natural number, got {n!r}")
        ids = self._nimber_ids
        while len(ids) <= n:
            # Nimber handles increase with n, so the tuple is already sorted.
            gid = self._intern(tuple(ids))
            ids.append(gid)
            self._nimber_of[gid] = len(ids) - 1
        return ids[n]

    def nimber_value(self, game: GameId) -> int | None:
        """``n`` when ``game`` was built as the nimber ``*n``, else None."""
        return self._nimber_of.get(game)

    def nim_piles(self, game: GameId) -> tuple[int, ...] | None:
        """Canonical pile tuple when ``game`` was built as a Nim position."""
        return self._nim_piles.get(game)

    def nim_position(self, piles: Iterable[int]) -> GameId:
        """Handle of the Nim position with the given pile multiset.

        Zero piles are dropped and piles are sorted: Nim is symmetric in its
        piles and an empty pile contributes no moves, so all orderings of the
        same multiset intern to one form. Every position reachable from the
        requested one is interned and memoized along the way.
        """
        canon = self._canonical_piles(piles)
        got = self._nim_ids.get(canon)
        if got is not None:
            return got
        budget = self.node_limit - len(self._nodes)
        fresh = []
        for pos in self._dominated_positions(canon):
            if pos not in self._nim_ids:
                fresh.append(pos)
                if len(fresh) > budget:
                    raise ResourceLimitError(
                        f"nim position on piles {canon} needs more than the "
                        f"remaining budget of {budget} forms"
                    )
        # Options only ever reduce the total stone count, so interning in
        # increasing-total order sees every option already registered.
        fresh.sort(key=lambda p: (sum(p), p))
        for pos in fresh:
            opts = set()
            for i, size in enumerate(pos):
                rest = pos[:i] + pos[i + 1 :]
                opts.add(self._nim_ids[rest])
                for w in range(1, size):
                    opts.add(self._nim_ids[tuple(sorted(rest + (w,)))])
            gid = self.mk_game(opts)
            self._nim_ids[pos] = gid
            self._nim_piles.setdefault(gid, pos)
        return self._nim_ids[canon]

    @staticmethod
    def _canonical_piles(piles: Iterable[int]) -> tuple[int, ...]:
        out = []
        for p in piles:
            if not isinstance(p, int) or p < 0:
                raise ValueError(f"pile sizes must be natural numbers, got {p!r}")
            if p:
                out.append(p)
        out.sort()
        return tuple(out)

    @staticmethod
    def _dominated_positions(piles: tuple[int, ...]) -> list[tuple[int, ...]]:
        """All positions reachable from ``piles``, as canonical tuples.

        Reachable multisets are exactly the sorted tuples dominated pointwise
        by the sorted pile tuple; enumerating them directly (rather than raw
        per-pile reductions) keeps the count at the number of distinct forms.
        """
        out: list[tuple[int, ...]] = []
        k = len(piles)
        acc: list[int] = []

        def rec(i: int, lo: int) -> None:
            if i == k:
                out.append(tuple(v for v in acc if v))
                return
            for w in range(lo, piles[i] + 1):
                acc.append(w)
                rec(i + 1, w)
                acc.pop()

        rec(0, 0)
        return out

    def disjunctive_sum(self, left: GameId, right: GameId) -> GameId:
        """Structural disjunctive sum: a move is a move in exactly one part.

        Symmetric by construction, so the memo is keyed on the unordered
        pair. Evaluated with an explicit stack; no recursion-depth limit.
        """
        self._check_id(left)
        self._check_id(right)
        nodes = self._nodes
        memo = self._sum_memo
        root = (left, right) if left <= right else (right, left)
        if root in memo:
            return memo[root]
        stack = [root]
        while stack:
            cur = stack[-1]
            if cur in memo:
                stack.pop()
                continue
            a, b = cur
            if a == EMPTY:  # keys are ordered, so b covers both-empty too
                memo[cur] = b
                stack.pop()
                continue
            children = [(x, b) if x <= b else (b, x) for x in nodes[a]]
            children += [(a, y) if a <= y else (y, a) for y in nodes[b]]
            pending = [c for c in children if c not in memo]
            if pending:
                stack.extend(pending)
                continue
            memo[cur] = self._intern(tuple(sorted({memo[c] for c in children})))
            stack.pop()
        return memo[root]

    def birthday(self, game: GameId) -> int:
        """Height of the form's DAG: 0 for the empty game, else 1 + max over options."""
        self._check_id(game)
        table = self._birthdays
        nodes = self._nodes
        # Option handles precede their owner, so filling in handle order works.
        while len(table) <= game:
            opts = nodes[len(table)]
            table.append(1 + max(table[o] for o in opts) if opts else 0)
        return table[game]
