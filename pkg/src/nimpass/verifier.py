"""Exhaustive and randomized checks of the engine's algebraic laws.

Each check consumes a stream of cases, asserts one law on every applicable
case, and returns a :class:`VerificationReport` carrying counterexamples as
re-parseable expressions. :func:`run_suite` wires the checks to standard case
sources: exhaustive enumeration of small forms followed by seeded random
sampling.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .arena import EMPTY, Arena, GameId
from .expressions import format_game
from .operators import pass_op, split_sum
from .report import Failure, VerificationReport
from .solver import grundy, outcome

#: Hard cap for exhaustive form enumeration; one day further is astronomical.
MAX_ENUMERATION_DAY = 4

#: Nimber range used for exhaustive nimber-extension runs.
NER_EXHAUSTIVE_NIMBER_MAX = 3

#: Pile bounds for the Nim-specific sum-rule check.
SUM_RULE_MAX_PILES = 3
SUM_RULE_MAX_PILE = 6

EXHAUSTIVE = "exhaustive"
RANDOM = "random"

ALL_CHECKS = (
    "p_closure",
    "mixed_n",
    "split_assoc",
    "right_congruence",
    "ner",
    "sum_rule",
    "nimber_characterization",
    "double_pass",
)


class UnknownCheckError(ValueError):
    """A verification selection named no known check."""


@dataclass(frozen=True)
class GenConfig:
    """Random-case generation parameters.

    ``max_birthday`` bounds the depth budget of generated forms,
    ``max_options`` the option count drawn at each node, ``samples`` how many
    random cases each check receives, and ``seed`` makes runs reproducible.
    """

    max_birthday: int = 5
    max_options: int = 3
    samples: int = 200
    seed: int = 42

    def __post_init__(self):
        if self.max_birthday < 0:
            raise ValueError("max_birthday must be a natural number")
        if self.max_options < 1:
            raise ValueError("max_options must be at least 1")
        if self.samples < 0:
            raise ValueError("samples must be a natural number")


def enumerate_by_birthday(arena: Arena, day: int) -> list[GameId]:
    """All distinct forms born by ``day``, interned.

    Day 0 holds only the empty game; each later day holds every subset of the
    previous day's list, so the counts are 1, 2, 4, 16, 65536. Capped at day
    4.
    """
    if day < 0:
        raise ValueError("day must be a natural number")
    if day > MAX_ENUMERATION_DAY:
        raise ValueError(
            f"exhaustive enumeration is capped at day {MAX_ENUMERATION_DAY}; "
            f"day {day} has far too many forms"
        )
    forms = [EMPTY]
    for _ in range(day):
        prev = forms
        forms = []
        for mask in range(1 << len(prev)):
            opts = [prev[i] for i in range(len(prev)) if mask >> i & 1]
            forms.append(arena.mk_game(opts))
    return forms


def random_game(arena: Arena, cfg: GenConfig, rng: random.Random) -> GameId:
    """Sample an interned form of birthday at most ``cfg.max_birthday``.

    At each node the option count is drawn uniformly from
    ``[0, cfg.max_options]`` and each option is sampled with one less depth
    budget; budget 0 forces the empty game. Deterministic for a given rng
    state.
    """

    def build(budget: int) -> GameId:
        if budget <= 0:
            return EMPTY
        k = rng.randint(0, cfg.max_options)
        return arena.mk_game(build(budget - 1) for _ in range(k))

    return build(cfg.max_birthday)


def is_hereditarily_transitive(arena: Arena, game: GameId) -> bool:
    """Whether every option of an option of ``game`` is an option of ``game``."""
    opts = set(arena.options(game))
    nodes = arena.nodes
    return all(opts.issuperset(nodes[o]) for o in opts)


def is_nimber_like(arena: Arena, game: GameId) -> bool:
    """Hereditary transitivity, holding recursively at every suboption."""
    memo = arena.cache("nimber_like")
    got = memo.get(game)
    if got is not None:
        return got
    arena.options(game)
    nodes = arena.nodes
    stack = [game]
    while stack:
        cur = stack[-1]
        if cur in memo:
            stack.pop()
            continue
        opts = nodes[cur]
        pending = [o for o in opts if o not in memo]
        if pending:
            stack.extend(pending)
            continue
        memo[cur] = all(memo[o] for o in opts) and is_hereditarily_transitive(
            arena, cur
        )
        stack.pop()
    return memo[game]


def _finish(
    theorem: str,
    mode: str,
    seed: int | None,
    start: float,
    cases: int,
    failures: list[Failure],
    excluded: int = 0,
) -> VerificationReport:
    return VerificationReport(
        theorem=theorem,
        mode=mode,
        cases=cases,
        failures=failures,
        seed=seed,
        elapsed_ms=int((time.perf_counter() - start) * 1000),
        excluded=excluded,
    )


def check_p_closure(
    arena: Arena,
    pairs: Iterable[tuple[GameId, GameId]],
    *,
    mode: str = EXHAUSTIVE,
    seed: int | None = None,
) -> VerificationReport:
    """Split sums of two P-positions are P-positions."""
    start = time.perf_counter()
    cases = 0
    failures = []
    for g, h in pairs:
        if grundy(arena, g) != 0 or grundy(arena, h) != 0:
            continue
        cases += 1
        if grundy(arena, split_sum(arena, g, h)) != 0:
            failures.append(
                Failure(
                    inputs={"G": format_game(arena, g), "H": format_game(arena, h)},
                    expected="split(G,H) is P",
                    actual="split(G,H) is N",
                )
            )
    return _finish("p_closure", mode, seed, start, cases, failures)


def check_mixed_n(
    arena: Arena,
    pairs: Iterable[tuple[GameId, GameId]],
    *,
    mode: str = EXHAUSTIVE,
    seed: int | None = None,
) -> VerificationReport:
    """A split sum with exactly one P-position side is an N-position.

    The claim fails on its face when the left side is the empty game (the
    split sum is then the empty game, a P-position, regardless of the right
    side), so those cases are excluded and counted rather than asserted.
    """
    start = time.perf_counter()
    cases = 0
    excluded = 0
    failures = []
    for g, h in pairs:
        if (grundy(arena, g) == 0) == (grundy(arena, h) == 0):
            continue
        if g == EMPTY:
            excluded += 1
            continue
        cases += 1
        if grundy(arena, split_sum(arena, g, h)) == 0:
            failures.append(
                Failure(
                    inputs={"G": format_game(arena, g), "H": format_game(arena, h)},
                    expected="split(G,H) is N",
                    actual="split(G,H) is P",
                )
            )
    return _finish("mixed_n", mode, seed, start, cases, failures, excluded)


def check_split_assoc(
    arena: Arena,
    triples: Iterable[tuple[GameId, GameId, GameId]],
    *,
    mode: str = EXHAUSTIVE,
    seed: int | None = None,
) -> VerificationReport:
    """split(split(G,H),K) has the same value as split(G, H+K)."""
    start = time.perf_counter()
    cases = 0
    failures = []
    for g, h, k in triples:
        cases += 1
        left = grundy(arena, split_sum(arena, split_sum(arena, g, h), k))
        right = grundy(arena, split_sum(arena, g, arena.disjunctive_sum(h, k)))
        if left != right:
            failures.append(
                Failure(
                    inputs={
                        "G": format_game(arena, g),
                        "H": format_game(arena, h),
                        "K": format_game(arena, k),
                    },
                    expected=f"grundy {left} on both sides",
                    actual=f"left {left}, right {right}",
                )
            )
    return _finish("split_assoc", mode, seed, start, cases, failures)


def check_right_congruence(
    arena: Arena,
    triples: Iterable[tuple[GameId, GameId, GameId]],
    *,
    mode: str = EXHAUSTIVE,
    seed: int | None = None,
) -> VerificationReport:
    """Equal-valued right arguments give equal-valued split sums."""
    start = time.perf_counter()
    cases = 0
    failures = []
    for g, h, k in triples:
        if grundy(arena, h) != grundy(arena, k):
            continue
        cases += 1
        left = grundy(arena, split_sum(arena, g, h))
        right = grundy(arena, split_sum(arena, g, k))
        if left != right:
            failures.append(
                Failure(
                    inputs={
                        "G": format_game(arena, g),
                        "H": format_game(arena, h),
                        "K": format_game(arena, k),
                    },
                    expected=f"grundy {left} on both sides",
                    actual=f"left {left}, right {right}",
                )
            )
    return _finish("right_congruence", mode, seed, start, cases, failures)


def check_ner(
    arena: Arena,
    cases_src: Iterable[tuple[GameId, GameId, int]],
    *,
    mode: str = EXHAUSTIVE,
    seed: int | None = None,
) -> VerificationReport:
    """Nimber extension rule: split(G,H)+*n and split(G+*n,H) share their outcome."""
    start = time.perf_counter()
    cases = 0
    failures = []
    for g, h, n in cases_src:
        cases += 1
        star = arena.nimber(n)
        left = outcome(arena, arena.disjunctive_sum(split_sum(arena, g, h), star))
        right = outcome(arena, split_sum(arena, arena.disjunctive_sum(g, star), h))
        if left != right:
            failures.append(
                Failure(
                    inputs={
                        "G": format_game(arena, g),
                        "H": format_game(arena, h),
                        "n": f"star({n})",
                    },
                    expected="matching outcomes",
                    actual=f"sum(split(G,H),star(n)) is {left}, "
                    f"split(sum(G,star(n)),H) is {right}",
                )
            )
    return _finish("ner", mode, seed, start, cases, failures)


def check_sum_rule(
    arena: Arena,
    cases_src: Iterable[tuple[tuple[int, ...], GameId]],
    *,
    mode: str = EXHAUSTIVE,
    seed: int | None = None,
) -> VerificationReport:
    """Any two winning pile moves in distinct piles of a Nim-left split sum
    remove the same nim-value: old XOR new agrees across piles.

    Vacuously true for cases with fewer than two winning pile moves.
    """
    start = time.perf_counter()
    cases = 0
    failures = []
    for piles, h in cases_src:
        cases += 1
        canon = tuple(sorted(p for p in piles if p))
        total = split_sum(arena, arena.nim_position(canon), h)
        if grundy(arena, total) == 0:
            continue
        winning: list[tuple[int, int, int]] = []  # (pile index, old, new)
        for i, old in enumerate(canon):
            rest = canon[:i] + canon[i + 1 :]
            for new in range(old):
                reduced = arena.nim_position(rest + (new,))
                if grundy(arena, split_sum(arena, reduced, h)) == 0:
                    winning.append((i, old, new))
        for (i, a, a2), (j, b, b2) in itertools.combinations(winning, 2):
            if i == j:
                continue
            if a ^ a2 != b ^ b2:
                failures.append(
                    Failure(
                        inputs={
                            "G": "nim(%s)" % ",".join(map(str, canon)),
                            "H": format_game(arena, h),
                        },
                        expected="equal nim-values removed by winning moves",
                        actual=f"pile {i}: {a}->{a2} removes {a ^ a2}, "
                        f"pile {j}: {b}->{b2} removes {b ^ b2}",
                    )
                )
    return _finish("sum_rule", mode, seed, start, cases, failures)


def check_nimber_characterization(
    arena: Arena,
    forms: Iterable[GameId],
    *,
    mode: str = EXHAUSTIVE,
    seed: int | None = None,
) -> VerificationReport:
    """Every nimber-like form is literally a nimber."""
    start = time.perf_counter()
    cases = 0
    failures = []
    for g in forms:
        cases += 1
        if not is_nimber_like(arena, g):
            continue
        if g != arena.nimber(len(arena.options(g))):
            failures.append(
                Failure(
                    inputs={"G": format_game(arena, g)},
                    expected="a nimber",
                    actual="nimber-like but not a nimber",
                )
            )
    return _finish("nimber_characterization", mode, seed, start, cases, failures)


def check_double_pass(
    arena: Arena,
    forms: Iterable[GameId],
    *,
    mode: str = EXHAUSTIVE,
    seed: int | None = None,
) -> VerificationReport:
    """Adding a pass twice restores the original game's value."""
    start = time.perf_counter()
    cases = 0
    failures = []
    for g in forms:
        cases += 1
        twice = grundy(arena, pass_op(arena, pass_op(arena, g)))
        base = grundy(arena, g)
        if twice != base:
            failures.append(
                Failure(
                    inputs={"G": format_game(arena, g)},
                    expected=f"grundy {base}",
                    actual=f"grundy {twice}",
                )
            )
    return _finish("double_pass", mode, seed, start, cases, failures)


def _nim_multisets(max_piles: int, max_pile: int) -> list[tuple[int, ...]]:
    """Sorted pile multisets with at most ``max_piles`` piles of bounded size."""
    out = set()
    for combo in itertools.combinations_with_replacement(
        range(max_pile + 1), max_piles
    ):
        out.add(tuple(p for p in combo if p))
    return sorted(out)


def _resolve_selection(selection) -> list[str]:
    if isinstance(selection, str):
        names = ALL_CHECKS if selection == "all" else (selection,)
    else:
        names = tuple(selection)
    for name in names:
        if name not in ALL_CHECKS:
            raise UnknownCheckError(
                f"unknown check {name!r}; known: {', '.join(ALL_CHECKS)} or 'all'"
            )
    return list(names)


def run_suite(
    selection,
    cfg: GenConfig = GenConfig(),
    *,
    exhaustive_birthday: int = 3,
    arena: Arena | None = None,
) -> list[VerificationReport]:
    """Run the selected checks exhaustively, then on seeded random cases.

    ``selection`` is a check name, a sequence of names, or ``"all"``.
    Exhaustive pair and triple sources enumerate forms born by
    ``exhaustive_birthday`` (at most 3); single-form checks go one day
    further, up to the day-4 cap. Each check then receives ``cfg.samples``
    random cases drawn from a check-specific rng derived from ``cfg.seed``,
    reported separately. Reports are deterministic for fixed inputs, apart
    from timing.
    """
    names = _resolve_selection(selection)
    if not 0 <= exhaustive_birthday <= 3:
        raise ValueError("exhaustive_birthday must be between 0 and 3")
    if arena is None:
        arena = Arena()
    small = enumerate_by_birthday(arena, exhaustive_birthday)
    unary = enumerate_by_birthday(
        arena, min(exhaustive_birthday + 1, MAX_ENUMERATION_DAY)
    )
    nim_multisets = _nim_multisets(SUM_RULE_MAX_PILES, SUM_RULE_MAX_PILE)
    double_pass_forms = unary + [arena.nim_position(m) for m in nim_multisets]

    exhaustive_sources = {
        "p_closure": lambda: itertools.product(small, repeat=2),
        "mixed_n": lambda: itertools.product(small, repeat=2),
        "split_assoc": lambda: itertools.product(small, repeat=3),
        "right_congruence": lambda: itertools.product(small, repeat=3),
        "ner": lambda: itertools.product(
            small, small, range(NER_EXHAUSTIVE_NIMBER_MAX + 1)
        ),
        "sum_rule": lambda: itertools.product(nim_multisets, small),
        "nimber_characterization": lambda: iter(unary),
        "double_pass": lambda: iter(double_pass_forms),
    }

    def random_source(name: str, rng: random.Random):
        draw = lambda: random_game(arena, cfg, rng)
        for _ in range(cfg.samples):
            if name in ("p_closure", "mixed_n"):
                yield draw(), draw()
            elif name in ("split_assoc", "right_congruence"):
                yield draw(), draw(), draw()
            elif name == "ner":
                yield draw(), draw(), rng.randint(0, max(1, cfg.max_birthday))
            elif name == "sum_rule":
                k = rng.randint(0, SUM_RULE_MAX_PILES)
                piles = tuple(
                    sorted(rng.randint(1, SUM_RULE_MAX_PILE) for _ in range(k))
                )
                yield piles, draw()
            else:
                yield draw()

    checks = {
        "p_closure": check_p_closure,
        "mixed_n": check_mixed_n,
        "split_assoc": check_split_assoc,
        "right_congruence": check_right_congruence,
        "ner": check_ner,
        "sum_rule": check_sum_rule,
        "nimber_characterization": check_nimber_characterization,
        "double_pass": check_double_pass,
    }

    reports = []
    for name in names:
        check = checks[name]
        reports.append(check(arena, exhaustive_sources[name]()))
        if cfg.samples > 0:
            rng = random.Random(f"{cfg.seed}/{name}")
            reports.append(
                check(arena, random_source(name, rng), mode=RANDOM, seed=cfg.seed)
            )
    return reports
