"""The symmetric evaluation game NG, with role-switching negation that keeps preferences."""

from __future__ import annotations

from . import gcl
from ._build import build_tree, leaf_true
from .game import Domain, GameTree, Payoff, solve
from .syntax import Formula

__all__ = ["GCL_DOMAIN", "build_ng_tree", "payoff_ng", "game_value_ng"]

GCL_DOMAIN = gcl.GCL_DOMAIN


def build_ng_tree(role: str, f: Formula) -> GameTree:
    """Game tree ``T(role:f)`` for NG.

    Same shape as the QCL game. Negation keeps the child's preferences, and
    under role O the order at ``G1 × G2`` is inverted: G1-leaves ≪ G2-leaves.
    """
    return build_tree(role, f, keep_negated=True)


def payoff_ng(tree: GameTree, i, domain: Domain = None) -> Payoff:
    """Signed payoff: ``+|longest ≪-chain|`` if true, ``-|longest ≫-chain|`` if false."""
    values = {}
    for leaf in tree.leaves:
        if leaf_true(tree, leaf, i):
            values[leaf] = tree.chain_up[leaf]
        else:
            values[leaf] = -tree.chain_down[leaf]
    return Payoff(values, domain or GCL_DOMAIN)


def game_value_ng(f: Formula, i, role: str = "P", domain: Domain = None) -> int:
    tree = build_ng_tree(role, f)
    return solve(tree, payoff_ng(tree, i, domain)).value
