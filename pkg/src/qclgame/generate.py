"""Seeded random formulas for property checking."""

from __future__ import annotations

import random
from typing import List, Sequence

from .syntax import And, Formula, Not, Or, OrdDisj, Var

CONNECTIVES = (Not, And, Or, OrdDisj)
DEFAULT_VARIABLES = ("a", "b", "c", "d")


def random_formula(rng: random.Random, max_connectives: int = 8,
                   variables: Sequence[str] = DEFAULT_VARIABLES) -> Formula:
    """A formula with a uniformly drawn number of connectives in ``[0, max_connectives]``.

    Each connective is drawn uniformly from ¬, ∧, ∨, ×; binary connectives
    split the remaining budget uniformly between their operands.
    """
    return _sized(rng, rng.randint(0, max_connectives), tuple(variables))


def _sized(rng, n, variables):
    if n == 0:
        return Var(rng.choice(variables))
    op = rng.choice(CONNECTIVES)
    if op is Not:
        return Not(_sized(rng, n - 1, variables))
    k = rng.randint(0, n - 1)
    return op(_sized(rng, k, variables), _sized(rng, n - 1 - k, variables))


def random_deep_formula(rng: random.Random, max_depth: int = 10,
                        variables: Sequence[str] = ("a", "b", "x1", "y_2", "fooBar", "p")) -> Formula:
    """A formula of depth at most ``max_depth``, biased towards deep nesting."""
    if max_depth == 0 or rng.random() < 0.15:
        return Var(rng.choice(variables))
    op = rng.choice(CONNECTIVES)
    if op is Not:
        return Not(random_deep_formula(rng, max_depth - 1, variables))
    return op(random_deep_formula(rng, max_depth - 1, variables),
              random_deep_formula(rng, max_depth - 1, variables))


def corpus(seed: int, count: int, max_connectives: int = 8,
           variables: Sequence[str] = DEFAULT_VARIABLES) -> List[Formula]:
    rng = random.Random(seed)
    return [random_formula(rng, max_connectives, variables) for _ in range(count)]


def depth(f: Formula) -> int:
    if isinstance(f, Var):
        return 0
    if isinstance(f, Not):
        return 1 + depth(f.child)
    return 1 + max(depth(f.left), depth(f.right))
