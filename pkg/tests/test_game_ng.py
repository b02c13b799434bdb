import pytest
from hypothesis import given

from qclgame.game import ME, YOU, maxmin_oracle, solve
from qclgame.game_ng import build_ng_tree, game_value_ng, payoff_ng
from qclgame.game_qcl import build_qcl_tree
from qclgame.gcl import degree_g, optionality_g
from qclgame.syntax import Not, Var, parse

from conftest import formulas, interpretations

FIG1 = parse("((a><b)><c) & !(a><d)")


def named_pairs(tree):
    return {(tree[x].caption, tree[y].caption) for x, y in tree.pref}


def test_same_shape_as_qcl_game():
    ng, g = build_ng_tree("P", FIG1), build_qcl_tree("P", FIG1)
    assert [(n.label, n.caption, n.children) for n in ng.nodes] == \
           [(n.label, n.caption, n.children) for n in g.nodes]


def test_running_formula_preferences():
    assert named_pairs(build_ng_tree("P", FIG1)) == {
        ("P:c", "P:b"), ("P:b", "P:a"), ("P:c", "P:a"), ("O:a", "O:d"),
    }


def test_double_negation_restores_orientation():
    assert named_pairs(build_ng_tree("P", parse("!!(a><b)"))) == {("P:b", "P:a")}


def test_opponent_tree_inverts_preferences():
    f = parse("(a >< b) >< c")
    p, o = build_ng_tree("P", f), build_ng_tree("O", f)
    assert o.pref == {(y, x) for x, y in p.pref}
    assert o.root.label == YOU


def test_atom():
    tree = build_ng_tree("P", Var("a"))
    assert tree.pref == frozenset()
    assert payoff_ng(tree, frozenset("a"))[0] == 1
    assert payoff_ng(tree, frozenset())[0] == -1


def test_running_formula_payoffs_over_d():
    tree = build_ng_tree("P", FIG1)
    p = payoff_ng(tree, frozenset("d"))
    assert {tree[n].caption: p[n] for n in tree.leaves} == {
        "P:a": -3, "P:b": -2, "P:c": -1, "O:a": 2, "O:d": -2,
    }


@pytest.mark.parametrize("text, interp, value", [
    ("((a><b)><c) & !(a><d)", "d", -2),
    ("((a><b)><c) & !(a><d)", "a", -1),
    ("!(a><b)", "b", -2),
    ("!(a><b)", "", 2),
    ("a", "", -1),
])
def test_game_values(text, interp, value):
    f = parse(text)
    assert game_value_ng(f, frozenset(interp)) == value == degree_g(f, frozenset(interp))


@given(formulas())
def test_longest_chain_both_roles(f):
    for role in ("P", "O"):
        assert max(build_ng_tree(role, f).chain_up.values()) == optionality_g(f)


@given(formulas(), interpretations())
def test_value_equals_gcl_degree(f, i):
    assert game_value_ng(f, i) == degree_g(f, i)


@given(formulas(), interpretations())
def test_role_symmetry(f, i):
    assert game_value_ng(f, i, role="O") == -degree_g(f, i)


@given(formulas(), interpretations())
def test_game_level_double_negation(f, i):
    assert game_value_ng(Not(Not(f)), i) == game_value_ng(f, i)


@given(formulas(), interpretations())
def test_oracle_agrees(f, i):
    tree = build_ng_tree("P", f)
    p = payoff_ng(tree, i)
    assert maxmin_oracle(tree, p) == solve(tree, p).value
