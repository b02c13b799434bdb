from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qclgame.gcl import GCL_DOMAIN, degree_g, leq_g, optionality_g, preferred_models_g
from qclgame.syntax import Not, OrdDisj, parse

from conftest import formulas, interpretations

nonzero = st.integers(-50, 50).filter(bool)


def leq_by_reciprocal(x, y):
    return Fraction(1, x) <= Fraction(1, y)


@pytest.mark.parametrize("x, y, expected", [
    (-1, 1, True),
    (2, 1, True),
    (1, 2, False),
    # You prefer -2 to -3 when minimizing, so -2 sits below -3
    (-2, -3, True),
    (-3, -2, False),
    (-5, 5, True),
])
def test_leq_g(x, y, expected):
    assert leq_g(x, y) is expected


def test_extremes():
    values = [v for v in range(-9, 10) if v]
    assert GCL_DOMAIN.max(values) == 1
    assert GCL_DOMAIN.min(values) == -1


@given(nonzero, nonzero)
def test_leq_matches_reciprocal_order(x, y):
    assert leq_g(x, y) == leq_by_reciprocal(x, y)


@given(nonzero, nonzero, nonzero)
def test_total_order(x, y, z):
    assert leq_g(x, y) or leq_g(y, x)
    if leq_g(x, y) and leq_g(y, x):
        assert x == y
    if leq_g(x, y) and leq_g(y, z):
        assert leq_g(x, z)


@pytest.mark.parametrize("text, opt", [("!(a >< b)", 2), ("a", 1), ("(a><b) & (c><d)", 2), ("!!(a><b><c)", 3)])
def test_optionality_g(text, opt):
    assert optionality_g(parse(text)) == opt


@pytest.mark.parametrize("text, interp, expected", [
    ("!(a >< b)", {"b"}, -2),
    ("!(a >< b)", {"a", "b"}, -1),
    ("!(a >< b)", {"a"}, -1),
    ("!(a >< b)", set(), 2),
    ("a >< b", set(), -2),
    ("a >< b", {"b"}, 2),
    ("a", set(), -1),
])
def test_degree_g(text, interp, expected):
    assert degree_g(parse(text), frozenset(interp)) == expected


def test_preferred_models_g():
    assert preferred_models_g(parse("a >< b")) == (1, {frozenset("a"), frozenset("ab")})
    assert preferred_models_g(parse("!(a >< b)")) == (2, {frozenset()})
    assert preferred_models_g(parse("a & !a")) == (None, set())


@given(formulas(max_leaves=3), formulas(max_leaves=3), formulas(max_leaves=3), interpretations())
def test_ordered_disjunction_associative(x, y, z, i):
    left, right = OrdDisj(OrdDisj(x, y), z), OrdDisj(x, OrdDisj(y, z))
    assert optionality_g(left) == optionality_g(right)
    assert degree_g(left, i) == degree_g(right, i)


@given(formulas(), interpretations())
def test_negation_flips_sign(f, i):
    d = degree_g(f, i)
    assert (d > 0) == (degree_g(Not(f), i) < 0)
    assert degree_g(Not(Not(f)), i) == d
    assert degree_g(Not(f), i) == -d


@given(formulas(), interpretations())
def test_degree_bounded_by_optionality(f, i):
    d = degree_g(f, i)
    assert d != 0 and abs(d) <= optionality_g(f)
