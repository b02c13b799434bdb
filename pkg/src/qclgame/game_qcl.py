"""The evaluation game G for QCL, where negation erases preferences."""

from __future__ import annotations

from ._build import build_tree, leaf_true
from .game import GameTree, Payoff, solve
from .qcl import INF, QCL_DOMAIN
from .syntax import Formula

__all__ = ["build_qcl_tree", "payoff_qcl", "game_value_qcl"]


def build_qcl_tree(role: str, f: Formula) -> GameTree:
    """Game tree ``T(role:f)`` with its preference order.

    At ``P:G1 × G2`` every leaf of the G2-subtree is ≪ every leaf of the
    G1-subtree. Below a negation, and throughout O-rooted trees, ≪ is empty.
    """
    return build_tree(role, f, keep_negated=False)


def payoff_qcl(tree: GameTree, i) -> Payoff:
    """True leaves score the length of their longest ≪-chain, false ones ``inf``."""
    values = {
        leaf: tree.chain_up[leaf] if leaf_true(tree, leaf, i) else INF
        for leaf in tree.leaves
    }
    return Payoff(values, QCL_DOMAIN)


def game_value_qcl(f: Formula, i, role: str = "P"):
    tree = build_qcl_tree(role, f)
    return solve(tree, payoff_qcl(tree, i)).value
