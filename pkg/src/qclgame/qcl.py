"""Degree semantics of Qualitative Choice Logic.

Degrees are positive ints or ``math.inf``; lower is better, ``inf`` means
the interpretation is not a model.
"""

from __future__ import annotations

import math
from typing import Sequence, Tuple, Union

from .game import Domain
from .syntax import (
    DEFAULT_CAP,
    And,
    Formula,
    Not,
    Or,
    OrdDisj,
    Var,
    all_interpretations,
    is_classical,
    variables,
)

__all__ = [
    "INF",
    "QCL_DOMAIN",
    "qcl_leq",
    "format_degree",
    "optionality",
    "degree",
    "preferred_models",
    "push_negation",
    "pqcl_degree",
    "entails",
]

INF = math.inf

# ⪯ is the inverse of the natural order: 1 is best, inf is worst
QCL_DOMAIN = Domain("qcl", key=lambda d: -d, winning=lambda d: d != INF)


def qcl_leq(a, b) -> bool:
    """``a ⪯ b``: ``b`` is at least as good as ``a``."""
    return a >= b


def format_degree(d) -> str:
    return "inf" if d == INF else str(int(d))


def optionality(f: Formula) -> int:
    if isinstance(f, (Var, Not)):
        return 1
    if isinstance(f, OrdDisj):
        return optionality(f.left) + optionality(f.right)
    return max(optionality(f.left), optionality(f.right))


def degree(f: Formula, i) -> Union[int, float]:
    """Satisfaction degree of ``f`` under the set of true variables ``i``."""
    if isinstance(f, Var):
        return 1 if f.name in i else INF
    if isinstance(f, Not):
        return 1 if degree(f.child, i) == INF else INF
    if isinstance(f, And):
        return max(degree(f.left, i), degree(f.right, i))
    if isinstance(f, Or):
        return min(degree(f.left, i), degree(f.right, i))
    left = degree(f.left, i)
    if left != INF:
        return left
    right = degree(f.right, i)
    if right != INF:
        return optionality(f.left) + right
    return INF


def preferred_models(f: Formula, cap: int = DEFAULT_CAP, over=None) -> Tuple[Union[int, float], set]:
    """Best finite degree and the interpretations attaining it.

    Interpretations range over subsets of ``vars(f)`` (or of ``over`` when
    given). Unsatisfiable formulas yield ``(inf, set())``.
    """
    names = variables(f) if over is None else frozenset(over) | variables(f)
    best, models = INF, set()
    for interp in all_interpretations(names, cap):
        d = degree(f, interp)
        if d == INF:
            continue
        if d < best:
            best, models = d, {interp}
        elif d == best:
            models.add(interp)
    return best, models


def push_negation(f: Formula) -> Formula:
    """Rewrite ``f`` so negation only applies to atoms (the PQCL reading).

    ``¬(F∧G)`` becomes ``¬F∨¬G``, ``¬(F∨G)`` becomes ``¬F∧¬G``,
    ``¬(F×G)`` becomes ``¬F×¬G`` and ``¬¬F`` becomes ``F``.
    """
    if isinstance(f, Var):
        return f
    if isinstance(f, Not):
        return _negate(f.child)
    return type(f)(push_negation(f.left), push_negation(f.right))


def _negate(g: Formula) -> Formula:
    if isinstance(g, Var):
        return Not(g)
    if isinstance(g, Not):
        return push_negation(g.child)
    if isinstance(g, And):
        return Or(_negate(g.left), _negate(g.right))
    if isinstance(g, Or):
        return And(_negate(g.left), _negate(g.right))
    return OrdDisj(_negate(g.left), _negate(g.right))


def pqcl_degree(f: Formula, i):
    return degree(push_negation(f), i)


def entails(premise: Union[Formula, Sequence[Formula]], conclusion: Formula,
            cap: int = DEFAULT_CAP) -> bool:
    """Preferred-model entailment from a single premise to a classical conclusion.

    Interpretations range over the variables of both formulas. An
    unsatisfiable premise entails everything.
    """
    if isinstance(premise, (list, tuple)):
        if len(premise) != 1:
            raise ValueError("entailment is only defined for a single premise formula")
        premise = premise[0]
    if not is_classical(conclusion):
        raise ValueError("the conclusion must be classical (no ordered disjunction)")
    _, models = preferred_models(premise, cap, over=variables(conclusion))
    return all(degree(conclusion, m) != INF for m in models)
