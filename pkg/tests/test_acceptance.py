"""Acceptance criteria, one test each. A PASS/FAIL line per criterion is
printed in the terminal summary (see conftest.py)."""

import random
import time

import pytest

from qclgame.checks import PROPERTIES, Case, check_property
from qclgame.game_ng import build_ng_tree, game_value_ng, payoff_ng
from qclgame.game_qcl import build_qcl_tree, game_value_qcl, payoff_qcl
from qclgame.generate import corpus, depth, random_deep_formula
from qclgame.qcl import INF, degree, pqcl_degree, preferred_models
from qclgame.syntax import all_interpretations, parse, size, to_text, variables

from conftest import ACCEPTANCE_RESULTS

SEED, COUNT = 7, 1000
RUNNING = parse("((a><b)><c) & !(a><d)")


def record(number, ok, text):
    ACCEPTANCE_RESULTS[number] = (ok, text)
    assert ok, text


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@pytest.fixture(scope="module")
def cases():
    formulas = corpus(SEED, COUNT)
    assert all(size(f) <= 8 and len(variables(f)) <= 4 for f in formulas)
    return [Case(f, k, formulas) for k, f in enumerate(formulas)]


def run_properties(names, cases):
    results = [check_property(PROPERTIES[name], cases) for name in names]
    failed = [r for r in results if not r.ok]
    summary = ", ".join(f"{r.name} {r.cases - r.failures}/{r.cases}" for r in results)
    detail = "; ".join(f"{r.name}: {r.counterexample}" for r in failed)
    return not failed, summary + (f" -- {detail}" if detail else "")


def test_01_degree_table():
    rows = [frozenset(), frozenset("b"), frozenset("a"), frozenset("ab")]
    expected = {
        "a >< b": [INF, 2, 1, 1],
        "!a & !b": [1, INF, INF, INF],
        "!(a >< b) [pqcl]": [1, 1, 2, INF],
    }
    with Timer() as t:
        got = {
            "a >< b": [degree(parse("a >< b"), i) for i in rows],
            "!a & !b": [degree(parse("!a & !b"), i) for i in rows],
            "!(a >< b) [pqcl]": [pqcl_degree(parse("!(a >< b)"), i) for i in rows],
        }
        order_ok = all_interpretations(parse("a >< b")) == rows
    ok = got == expected and order_ok and t.elapsed < 1
    record(1, ok, f"degree table: 12 entries {'match' if got == expected else f'differ: {got}'} ({t.elapsed:.3f}s)")


def test_02_preferred_under_constraint():
    f, f2 = parse("(a&b)><a><b"), parse("((a&b)><a><b) & !(a&b)")
    rows = [frozenset(), frozenset("b"), frozenset("a"), frozenset("ab")]
    with Timer() as t:
        degrees = [degree(f, i) for i in rows]
        pref = preferred_models(f)
        d_ab = degree(f2, frozenset("ab"))
        pref2 = preferred_models(f2)
    ok = (degrees == [INF, 3, 2, 1] and pref[1] == {frozenset("ab")} and d_ab == INF
          and pref2[1] == {frozenset("a")} and t.elapsed < 1)
    record(2, ok, f"(a&b)><a><b: degrees {degrees}, preferred {sorted(map(sorted, pref[1]))}; "
                  f"variant deg{{a,b}}={d_ab}, preferred {sorted(map(sorted, pref2[1]))} ({t.elapsed:.3f}s)")


def test_03_trip_example():
    f = parse("t & (m><a)")
    with Timer() as t:
        degrees = [degree(f, frozenset(s)) for s in ("tma", "tm", "ta")]
        best, models = preferred_models(f)
    ok = degrees == [1, 1, 2] and models == {frozenset("tma"), frozenset("tm")} and t.elapsed < 1
    record(3, ok, f"t&(m><a): degrees {degrees}, preferred {sorted(map(sorted, models))} ({t.elapsed:.3f}s)")


def test_04_g_game_values_and_payoffs():
    quoted = {
        "a": {"P:a": 1, "P:b": INF, "P:c": INF, "O:a": INF, "O:d": 2},
        "b": {"P:a": INF, "P:c": INF, "P:b": 2, "O:a": 1, "O:d": 1},
    }
    with Timer() as t:
        values = {s: game_value_qcl(RUNNING, frozenset(s)) for s in ("a", "b")}
        tree = build_qcl_tree("P", RUNNING)
        payoffs = {}
        for s in ("a", "b"):
            p = payoff_qcl(tree, frozenset(s))
            payoffs[s] = {tree[n].caption: p[n] for n in tree.leaves}
    mismatches = [f"d({leaf}) over {{{s}}} is {payoffs[s][leaf]}, quoted {want}"
                  for s in quoted for leaf, want in quoted[s].items() if payoffs[s][leaf] != want]
    ok = values == {"a": INF, "b": 2} and not mismatches and t.elapsed < 1
    record(4, ok, f"G game: values {{a}}={values['a']}, {{b}}={values['b']}; "
                  f"quoted payoffs {'match' if not mismatches else 'differ: ' + '; '.join(mismatches)}")


def test_05_ng_game_values_and_payoffs():
    quoted = {"P:a": -3, "P:b": -2, "P:c": -1, "O:a": 2, "O:d": -2}
    with Timer() as t:
        values = {s: game_value_ng(RUNNING, frozenset(s)) for s in ("a", "d")}
        tree = build_ng_tree("P", RUNNING)
        p = payoff_ng(tree, frozenset("d"))
        payoffs = {tree[n].caption: p[n] for n in tree.leaves}
    ok = values == {"a": -1, "d": -2} and payoffs == quoted and t.elapsed < 1
    record(5, ok, f"NG game: values {{a}}={values['a']}, {{d}}={values['d']}; delta over {{d}} {payoffs}")


def test_06_g_value_equals_degree(cases):
    with Timer() as t:
        ok, summary = run_properties(["theorem1"], cases)
    ok = ok and t.elapsed < 60
    record(6, ok, f"G value = QCL degree on {COUNT} formulas: {summary} ({t.elapsed:.2f}s)")


def test_07_ng_value_equals_gcl_degree(cases):
    with Timer() as t:
        ok, summary = run_properties(["theorem2"], cases)
    ok = ok and t.elapsed < 60
    record(7, ok, f"NG value = GCL degree on {COUNT} formulas: {summary} ({t.elapsed:.2f}s)")


def test_08_structural_properties(cases):
    with Timer() as t:
        ok, summary = run_properties(["lemma1", "lemma2", "lemma5", "lemma3", "lemma4", "lemma6"], cases)
    record(8, ok, f"bounds, associativity, chains, negation: {summary} ({t.elapsed:.2f}s)")


def test_09_oracle(cases):
    with Timer() as t:
        ok, summary = run_properties(["oracle-g", "oracle-ng"], cases)
    ok = ok and t.elapsed < 120
    record(9, ok, f"oracle equivalence: {summary} ({t.elapsed:.2f}s)")


def test_10_double_negation(cases):
    with Timer() as t:
        ok, summary = run_properties(["double-negation"], cases)
    record(10, ok, f"double negation (QCL collapse, PQCL/GCL preserve): {summary} ({t.elapsed:.2f}s)")


def test_11_round_trip(cases):
    rng = random.Random(SEED)
    deep = [random_deep_formula(rng, 10) for _ in range(1000)]
    assert max(depth(f) for f in deep) <= 10
    with Timer() as t:
        formulas = [c.f for c in cases] + deep
        bad = [f for f in formulas if parse(to_text(f)) != f]
    record(11, not bad, f"round trip: {len(formulas) - len(bad)}/{len(formulas)} formulas"
                        + (f", first failure {to_text(bad[0])!r}" if bad else "") + f" ({t.elapsed:.2f}s)")
