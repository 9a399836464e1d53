"""Surface syntax for game expressions: parsing, printing, evaluation.

Grammar (whitespace insensitive, NAT is a decimal natural number)::

    expr := "empty"
          | "star" "(" NAT ")"
          | "nim" "(" NAT { "," NAT } ")"
          | "pass" "(" expr ")"
          | "split" "(" expr "," expr ")"
          | "sum" "(" expr "," expr { "," expr } ")"
          | "game" "(" [ expr { "," expr } ] ")"

``game(...)`` names a form by its literal option set and exists so that every
interned form, however it arose, has a printable expression that parses back
to the same form. ``game()`` is the empty game.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arena import EMPTY, Arena, GameId
from .operators import pass_op, split_sum

MAX_NAT = 2**63 - 1


class ExprSyntaxError(ValueError):
    """Parse failure; ``position`` is the 0-based offset in the input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"syntax error at offset {position}: {message}")
        self.position = position
        self.reason = message


class GameExpr:
    """Abstract syntax tree node for a game expression."""

    __slots__ = ()


@dataclass(frozen=True)
class EmptyExpr(GameExpr):
    pass


@dataclass(frozen=True)
class StarExpr(GameExpr):
    n: int


@dataclass(frozen=True)
class NimExpr(GameExpr):
    piles: tuple[int, ...]


@dataclass(frozen=True)
class PassExpr(GameExpr):
    inner: GameExpr


@dataclass(frozen=True)
class SplitExpr(GameExpr):
    left: GameExpr
    right: GameExpr


@dataclass(frozen=True)
class SumExpr(GameExpr):
    parts: tuple[GameExpr, ...]


@dataclass(frozen=True)
class FormExpr(GameExpr):
    """Explicit option set, the ``game(...)`` constructor."""

    options: tuple[GameExpr, ...]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self) -> None:
        text = self.text
        while self.pos < len(text) and text[self.pos].isspace():
            self.pos += 1

    def _fail(self, message: str) -> None:
        raise ExprSyntaxError(message, self.pos)

    def _expect(self, ch: str) -> None:
        self._skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self._fail(f"expected '{ch}'")
        self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _name(self) -> str:
        self._skip_ws()
        start = self.pos
        text = self.text
        while self.pos < len(text) and text[self.pos].isalpha():
            self.pos += 1
        if self.pos == start:
            self._fail("expected a name (empty/star/nim/pass/split/sum/game)")
        return text[start : self.pos]

    def _nat(self) -> int:
        self._skip_ws()
        start = self.pos
        text = self.text
        while self.pos < len(text) and text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self._fail("expected a natural number")
        value = int(text[start : self.pos])
        if value > MAX_NAT:
            self.pos = start
            self._fail(f"number exceeds the supported maximum of {MAX_NAT}")
        return value

    def expr(self) -> GameExpr:
        name = self._name()
        if name == "empty":
            return EmptyExpr()
        if name == "star":
            self._expect("(")
            n = self._nat()
            self._expect(")")
            return StarExpr(n)
        if name == "nim":
            self._expect("(")
            piles = [self._nat()]
            while self._peek() == ",":
                self.pos += 1
                piles.append(self._nat())
            self._expect(")")
            return NimExpr(tuple(piles))
        if name == "pass":
            self._expect("(")
            inner = self.expr()
            self._expect(")")
            return PassExpr(inner)
        if name == "split":
            self._expect("(")
            left = self.expr()
            self._expect(",")
            right = self.expr()
            self._expect(")")
            return SplitExpr(left, right)
        if name == "sum":
            self._expect("(")
            parts = [self.expr()]
            self._expect(",")
            parts.append(self.expr())
            while self._peek() == ",":
                self.pos += 1
                parts.append(self.expr())
            self._expect(")")
            return SumExpr(tuple(parts))
        if name == "game":
            self._expect("(")
            options: list[GameExpr] = []
            if self._peek() != ")":
                options.append(self.expr())
                while self._peek() == ",":
                    self.pos += 1
                    options.append(self.expr())
            self._expect(")")
            return FormExpr(tuple(options))
        self.pos -= len(name)
        self._fail(f"unknown constructor {name!r}")
        raise AssertionError("unreachable")

    def parse(self) -> GameExpr:
        node = self.expr()
        self._skip_ws()
        if self.pos != len(self.text):
            self._fail("unexpected trailing input")
        return node


def parse_expr(text: str) -> GameExpr:
    """Parse ``text`` into an AST, raising :class:`ExprSyntaxError` with the
    failing offset otherwise."""
    return _Parser(text).parse()


def format_expr(expr: GameExpr) -> str:
    """Canonical text for an AST; ``parse_expr`` inverts it structurally."""
    if isinstance(expr, EmptyExpr):
        return "empty"
    if isinstance(expr, StarExpr):
        return f"star({expr.n})"
    if isinstance(expr, NimExpr):
        return "nim(%s)" % ",".join(map(str, expr.piles))
    if isinstance(expr, PassExpr):
        return f"pass({format_expr(expr.inner)})"
    if isinstance(expr, SplitExpr):
        return f"split({format_expr(expr.left)},{format_expr(expr.right)})"
    if isinstance(expr, SumExpr):
        return "sum(%s)" % ",".join(format_expr(p) for p in expr.parts)
    if isinstance(expr, FormExpr):
        return "game(%s)" % ",".join(format_expr(o) for o in expr.options)
    raise TypeError(f"not a game expression: {expr!r}")


def eval_expr(arena: Arena, expr: GameExpr) -> GameId:
    """Intern the form an AST denotes."""
    if isinstance(expr, EmptyExpr):
        return EMPTY
    if isinstance(expr, StarExpr):
        return arena.nimber(expr.n)
    if isinstance(expr, NimExpr):
        return arena.nim_position(expr.piles)
    if isinstance(expr, PassExpr):
        return pass_op(arena, eval_expr(arena, expr.inner))
    if isinstance(expr, SplitExpr):
        return split_sum(
            arena, eval_expr(arena, expr.left), eval_expr(arena, expr.right)
        )
    if isinstance(expr, SumExpr):
        acc = EMPTY
        for part in expr.parts:
            acc = arena.disjunctive_sum(acc, eval_expr(arena, part))
        return acc
    if isinstance(expr, FormExpr):
        return arena.mk_game(eval_expr(arena, o) for o in expr.options)
    raise TypeError(f"not a game expression: {expr!r}")


def format_game(arena: Arena, game: GameId) -> str:
    """A re-parseable expression denoting the interned form ``game``.

    Prefers ``empty``, ``star(n)`` and ``nim(...)`` when the arena built the
    form through those constructors, and falls back to the literal
    ``game(...)`` option set otherwise. Evaluating the result in the same
    arena returns the same handle.
    """
    arena.options(game)
    nodes = arena.nodes
    out: dict[GameId, str] = {}
    stack = [game]
    while stack:
        cur = stack[-1]
        if cur in out:
            stack.pop()
            continue
        if cur == EMPTY:
            out[cur] = "empty"
            stack.pop()
            continue
        n = arena.nimber_value(cur)
        if n is not None:
            out[cur] = f"star({n})"
            stack.pop()
            continue
        piles = arena.nim_piles(cur)
        if piles is not None:
            out[cur] = "nim(%s)" % ",".join(map(str, piles))
            stack.pop()
            continue
        opts = nodes[cur]
        pending = [o for o in opts if o not in out]
        if pending:
            stack.extend(pending)
            continue
        out[cur] = "game(%s)" % ",".join(out[o] for o in opts)
        stack.pop()
    return out[game]
