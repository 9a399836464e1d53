"""Impartial-game engine for pass moves and split sums.

The package interns game forms in an :class:`~nimpass.arena.Arena`, applies
the pass and split-sum operators to them, computes Grundy values and
outcomes, solves Nim with a Pass directly, and verifies the algebraic laws
relating all of the above at desk scale.
"""

from .arena import (
    DEFAULT_NODE_LIMIT,
    EMPTY,
    Arena,
    GameId,
    ResourceLimitError,
    UnknownGameIdError,
)
from .expressions import (
    ExprSyntaxError,
    GameExpr,
    eval_expr,
    format_expr,
    format_game,
    parse_expr,
)
from .nim_with_pass import (
    PASS_MOVE,
    GrundyTable,
    NimPassState,
    cross_check_three_pile,
    np_grundy,
    np_outcome,
    np_winning_moves,
    three_pile_ppos_direct,
    three_pile_ppos_ner,
    two_pile_table,
)
from .operators import pass_op, split_sum
from .report import Failure, VerificationReport
from .solver import Outcome, equal_values, grundy, mex, outcome, winning_moves
from .verifier import (
    ALL_CHECKS,
    GenConfig,
    UnknownCheckError,
    check_double_pass,
    check_mixed_n,
    check_ner,
    check_nimber_characterization,
    check_p_closure,
    check_right_congruence,
    check_split_assoc,
    check_sum_rule,
    enumerate_by_birthday,
    is_hereditarily_transitive,
    is_nimber_like,
    random_game,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CHECKS",
    "Arena",
    "DEFAULT_NODE_LIMIT",
    "EMPTY",
    "ExprSyntaxError",
    "Failure",
    "GameExpr",
    "GameId",
    "GenConfig",
    "GrundyTable",
    "NimPassState",
    "Outcome",
    "PASS_MOVE",
    "ResourceLimitError",
    "UnknownCheckError",
    "UnknownGameIdError",
    "VerificationReport",
    "check_double_pass",
    "check_mixed_n",
    "check_ner",
    "check_nimber_characterization",
    "check_p_closure",
    "check_right_congruence",
    "check_split_assoc",
    "check_sum_rule",
    "cross_check_three_pile",
    "enumerate_by_birthday",
    "equal_values",
    "eval_expr",
    "format_expr",
    "format_game",
    "grundy",
    "is_hereditarily_transitive",
    "is_nimber_like",
    "mex",
    "np_grundy",
    "np_outcome",
    "np_winning_moves",
    "outcome",
    "parse_expr",
    "pass_op",
    "random_game",
    "run_suite",
    "split_sum",
    "three_pile_ppos_direct",
    "three_pile_ppos_ner",
    "two_pile_table",
    "winning_moves",
]
