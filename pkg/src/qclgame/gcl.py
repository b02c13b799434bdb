"""Game-induced Choice Logic: signed degrees over the nonzero integers.

Positive degrees are models (1 best, then 2, 3, ...); negative degrees are
degrees of dissatisfaction, ordered so that -1 is the worst value and -2 is
better than -1. Put differently, ``a ⊴ b`` iff ``1/a <= 1/b``.
"""

from __future__ import annotations

from typing import Optional, Tuple

from .game import Domain
from .syntax import DEFAULT_CAP, And, Formula, Not, Or, OrdDisj, Var, all_interpretations, variables

__all__ = [
    "GCL_DOMAIN",
    "gcl_key",
    "leq_g",
    "optionality_g",
    "degree_g",
    "preferred_models_g",
]


def gcl_key(d: int):
    if d == 0:
        raise ValueError("0 is not a GCL degree")
    return (d > 0, -d)


GCL_DOMAIN = Domain("gcl", key=gcl_key, winning=lambda d: d > 0)


def leq_g(a: int, b: int) -> bool:
    """``a ⊴ b``."""
    return gcl_key(a) <= gcl_key(b)


def optionality_g(f: Formula) -> int:
    if isinstance(f, Var):
        return 1
    if isinstance(f, Not):
        return optionality_g(f.child)
    if isinstance(f, OrdDisj):
        return optionality_g(f.left) + optionality_g(f.right)
    return max(optionality_g(f.left), optionality_g(f.right))


def degree_g(f: Formula, i) -> int:
    if isinstance(f, Var):
        return 1 if f.name in i else -1
    if isinstance(f, Not):
        return -degree_g(f.child, i)
    if isinstance(f, And):
        return GCL_DOMAIN.min((degree_g(f.left, i), degree_g(f.right, i)))
    if isinstance(f, Or):
        return GCL_DOMAIN.max((degree_g(f.left, i), degree_g(f.right, i)))
    left = degree_g(f.left, i)
    if left > 0:
        return left
    right = degree_g(f.right, i)
    if right > 0:
        return optionality_g(f.left) + right
    return left - optionality_g(f.right)


def preferred_models_g(f: Formula, cap: int = DEFAULT_CAP) -> Tuple[Optional[int], set]:
    """The ⊴-best positive degree and all interpretations over ``vars(f)`` attaining it.

    Returns ``(None, set())`` when no interpretation yields a positive degree.
    """
    best: Optional[int] = None
    models: set = set()
    for interp in all_interpretations(variables(f), cap):
        d = degree_g(f, interp)
        if d < 0:
            continue
        if best is None or d < best:
            best, models = d, {interp}
        elif d == best:
            models.add(interp)
    return best, models
