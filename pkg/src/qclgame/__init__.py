"""Qualitative Choice Logic with game-theoretic semantics.

Formulas are parsed with :func:`parse`; :mod:`qclgame.qcl` and
:mod:`qclgame.gcl` give the degree semantics, and :mod:`qclgame.game_qcl`
and :mod:`qclgame.game_ng` build and solve the matching evaluation games.
"""

from .game import GameTree, Payoff, Strategy, maxmin_oracle, solve, to_dot
from .game_ng import build_ng_tree, game_value_ng, payoff_ng
from .game_qcl import build_qcl_tree, game_value_qcl, payoff_qcl
from .gcl import degree_g, leq_g, optionality_g, preferred_models_g
from .qcl import INF, degree, entails, format_degree, optionality, pqcl_degree, preferred_models, push_negation
from .syntax import (
    And,
    CapExceeded,
    Not,
    Or,
    OrdDisj,
    ParseError,
    Var,
    all_interpretations,
    parse,
    to_text,
    variables,
)

__version__ = "0.1.0"
