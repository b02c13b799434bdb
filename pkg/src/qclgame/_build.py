"""Shared construction of evaluation-game trees from formulas."""

from __future__ import annotations

from .game import ME, YOU, GameTree, Node
from .syntax import And, Formula, Not, Or, OrdDisj, Var

ROLES = ("P", "O")


def flip(role: str) -> str:
    return "O" if role == "P" else "P"


def label_for(role: str, f: Formula):
    """Who moves at game state ``role:f``. Proponent picks at ∨ and ×."""
    if isinstance(f, Var):
        return None
    proponent_moves = isinstance(f, (Or, OrdDisj, Not))
    if role == "P":
        return ME if proponent_moves else YOU
    return YOU if proponent_moves else ME


def build_tree(role: str, f: Formula, keep_negated: bool) -> GameTree:
    """Build ``T(role:f)``.

    ``keep_negated=False`` gives the QCL game: a negation switches roles and
    erases all preferences below it, and O-rooted trees carry none.
    ``keep_negated=True`` gives the symmetric game: negation switches roles
    and preferences under role O are the inverse of those under P.
    """
    if role not in ROLES:
        raise ValueError(f"role must be 'P' or 'O', not {role!r}")
    rows = []  # [id, label, children, role, formula]
    pref = set()

    def visit(role, f, active):
        idx = len(rows)
        row = [idx, label_for(role, f), [], role, f]
        rows.append(row)
        if isinstance(f, Var):
            return [idx]
        if isinstance(f, Not):
            c = len(rows)
            leaves = visit(flip(role), f.child, active and keep_negated)
            row[2] = [c]
            return leaves
        lc = len(rows)
        left = visit(role, f.left, active)
        rc = len(rows)
        right = visit(role, f.right, active)
        row[2] = [lc, rc]
        if isinstance(f, OrdDisj) and active:
            if role == "P":
                pref.update((r, l) for r in right for l in left)
            else:
                pref.update((l, r) for l in left for r in right)
        return left + right

    active = keep_negated or role == "P"
    visit(role, f, active)
    nodes = [Node(idx, label, tuple(children), r, g) for idx, label, children, r, g in rows]
    return GameTree(nodes, pref)


def leaf_true(tree: GameTree, leaf: int, i) -> bool:
    """``P:a`` is true iff ``a`` is in ``i``; ``O:a`` iff it is not."""
    node = tree[leaf]
    inside = node.formula.name in i
    return inside if node.role == "P" else not inside
