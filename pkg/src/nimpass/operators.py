"""The two form-sensitive operators: adding a pass move, and the split sum.

Both operators act on literal forms, not on game values. Feeding them
value-equal but structurally different inputs can produce games with
different values, which is why the arena never simplifies forms.
"""

from __future__ import annotations

from .arena import EMPTY, Arena, GameId


def pass_op(arena: Arena, game: GameId) -> GameId:
    """The form of ``game`` with a once-per-game pass move added.

    From a nonempty position the mover may either play an ordinary move
    (keeping the pass available) or spend the pass, which strips the extra
    move and leaves the underlying position. The pass is illegal once no
    ordinary move remains, so the empty game maps to itself:

        pass(E) = E
        pass(G) = {G} | {pass(g) for g in options(G)}   otherwise

    Memoized per arena.
    """
    memo = arena.cache("pass_op")
    got = memo.get(game)
    if got is not None:
        return got
    arena.options(game)  # validates the handle
    nodes = arena.nodes
    stack = [game]
    while stack:
        cur = stack[-1]
        if cur in memo:
            stack.pop()
            continue
        if cur == EMPTY:
            memo[cur] = EMPTY
            stack.pop()
            continue
        opts = nodes[cur]
        pending = [o for o in opts if o not in memo]
        if pending:
            stack.extend(pending)
            continue
        memo[cur] = arena.mk_game((cur,) + tuple(memo[o] for o in opts))
        stack.pop()
    return memo[game]


def split_sum(arena: Arena, left: GameId, right: GameId) -> GameId:
    """Sum of two games where moves in ``right`` are legal only while
    ``left`` still has moves:

        split(E, H) = E
        split(G, E) = G
        split(G, H) = {split(g, H)} | {split(G, h)}   otherwise

    Neither commutative nor associative, so the memo key is the ordered
    pair and is never normalized.
    """
    memo = arena.cache("split_sum")
    key = (left, right)
    got = memo.get(key)
    if got is not None:
        return got
    arena.options(left)
    arena.options(right)
    nodes = arena.nodes
    stack = [key]
    while stack:
        cur = stack[-1]
        if cur in memo:
            stack.pop()
            continue
        a, b = cur
        if a == EMPTY:
            memo[cur] = EMPTY
            stack.pop()
            continue
        if b == EMPTY:
            memo[cur] = a
            stack.pop()
            continue
        children = [(x, b) for x in nodes[a]]
        children += [(a, y) for y in nodes[b]]
        pending = [c for c in children if c not in memo]
        if pending:
            stack.extend(pending)
            continue
        memo[cur] = arena.mk_game(memo[c] for c in children)
        stack.pop()
    return memo[key]
