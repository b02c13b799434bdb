import pytest
from hypothesis import strategies as st

from qclgame.syntax import And, Not, Or, OrdDisj, Var

VARS = ("a", "b", "c", "d")


def formulas(names=VARS, max_leaves=6):
    """Hypothesis strategy for small formulas over ``names``."""
    atoms = st.sampled_from(names).map(Var)
    return st.recursive(
        atoms,
        lambda sub: st.one_of(
            sub.map(Not),
            st.tuples(sub, sub).map(lambda p: And(*p)),
            st.tuples(sub, sub).map(lambda p: Or(*p)),
            st.tuples(sub, sub).map(lambda p: OrdDisj(*p)),
        ),
        max_leaves=max_leaves,
    )


def interpretations(names=VARS):
    return st.frozensets(st.sampled_from(names))


# acceptance criteria record their outcome here; printed after the run
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, line = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {number:>2}. {line}")
