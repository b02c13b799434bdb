"""Batch verification of the adequacy theorems and lemmas on random formulas.

Every property is checked on each formula of a seeded corpus and on every
interpretation over the formula's variables. Failures are collected with a
counterexample rather than raised.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Sequence

from .game import ME, ORACLE_CAP, YOU, Domain, count_strategies, oracle_values, solve
from .game_ng import build_ng_tree, payoff_ng
from .game_qcl import build_qcl_tree, payoff_qcl
from .gcl import degree_g, optionality_g
from .generate import corpus as make_corpus
from .qcl import INF, degree, format_degree, optionality, pqcl_degree
from .syntax import Not, OrdDisj, all_interpretations, format_interpretation, parse, to_text, variables

__all__ = ["PROPERTIES", "PropertyResult", "Report", "Case", "run_checks", "check_property"]


class Case:
    """One corpus formula with lazily built game trees."""

    def __init__(self, f, index: int, formulas: Sequence, gcl_domain: Optional[Domain] = None,
                 oracle_cap: int = ORACLE_CAP):
        self.f = f
        self.index = index
        self.formulas = formulas
        self.gcl_domain = gcl_domain
        self.oracle_cap = oracle_cap
        self.interps = all_interpretations(variables(f))

    @functools.cached_property
    def g_tree(self):
        return build_qcl_tree("P", self.f)

    @functools.cached_property
    def g_tree_o(self):
        return build_qcl_tree("O", self.f)

    @functools.cached_property
    def ng_tree(self):
        return build_ng_tree("P", self.f)

    @functools.cached_property
    def ng_tree_o(self):
        return build_ng_tree("O", self.f)

    def ng_payoff(self, tree, i):
        return payoff_ng(tree, i, self.gcl_domain)

    def triple(self):
        n = len(self.formulas)
        return self.f, self.formulas[(self.index + 1) % n], self.formulas[(self.index + 2) % n]


def _where(f, i) -> str:
    return f"formula {to_text(f)!r}, interpretation {format_interpretation(i)}"


def _mismatch(f, i, expected, got, fmt=str) -> str:
    return f"{_where(f, i)}: expected {fmt(expected)}, got {fmt(got)}"


# Each property yields None for a passing sub-case or a counterexample string.

def prop_theorem1(c: Case) -> Iterator[Optional[str]]:
    for i in c.interps:
        got = solve(c.g_tree, payoff_qcl(c.g_tree, i)).value
        want = degree(c.f, i)
        yield None if got == want else _mismatch(c.f, i, want, got, format_degree)


def prop_theorem2(c: Case):
    for i in c.interps:
        got = solve(c.ng_tree, c.ng_payoff(c.ng_tree, i)).value
        want = degree_g(c.f, i)
        yield None if got == want else _mismatch(c.f, i, want, got)


def prop_opponent_g(c: Case):
    for i in c.interps:
        got = solve(c.g_tree_o, payoff_qcl(c.g_tree_o, i)).value
        want = INF if degree(c.f, i) != INF else 1
        yield None if got == want else _mismatch(c.f, i, want, got, format_degree)


def prop_opponent_ng(c: Case):
    for i in c.interps:
        got = solve(c.ng_tree_o, c.ng_payoff(c.ng_tree_o, i)).value
        want = -degree_g(c.f, i)
        yield None if got == want else _mismatch(c.f, i, want, got)


def prop_lemma1(c: Case):
    opt = optionality(c.f)
    for i in c.interps:
        d = degree(c.f, i)
        yield None if d == INF or 1 <= d <= opt else f"{_where(c.f, i)}: degree {d} exceeds opt {opt}"


def prop_lemma1_g(c: Case):
    opt = optionality_g(c.f)
    for i in c.interps:
        d = degree_g(c.f, i)
        yield None if d != 0 and abs(d) <= opt else f"{_where(c.f, i)}: |{d}| exceeds opt^G {opt}"


def prop_lemma2(c: Case):
    a, b, cc = c.triple()
    f1, f2 = OrdDisj(OrdDisj(a, b), cc), OrdDisj(a, OrdDisj(b, cc))
    if optionality(f1) != optionality(f2):
        yield f"formula {to_text(f1)!r}: optionalities differ"
        return
    for i in all_interpretations(variables(f1)):
        d1, d2 = degree(f1, i), degree(f2, i)
        yield None if d1 == d2 else _mismatch(f1, i, d2, d1, format_degree)


def prop_lemma5(c: Case):
    a, b, cc = c.triple()
    f1, f2 = OrdDisj(OrdDisj(a, b), cc), OrdDisj(a, OrdDisj(b, cc))
    if optionality_g(f1) != optionality_g(f2):
        yield f"formula {to_text(f1)!r}: optionalities differ"
        return
    for i in all_interpretations(variables(f1)):
        d1, d2 = degree_g(f1, i), degree_g(f2, i)
        yield None if d1 == d2 else _mismatch(f1, i, d2, d1)


def _max_chain(tree) -> int:
    return max(tree.chain_up.values())


def prop_lemma3(c: Case):
    got, want = _max_chain(c.g_tree), optionality(c.f)
    yield None if got == want else f"formula {to_text(c.f)!r}: longest chain {got}, opt {want}"


def prop_lemma4(c: Case):
    want = optionality_g(c.f)
    for role, tree in (("P", c.ng_tree), ("O", c.ng_tree_o)):
        got = _max_chain(tree)
        yield None if got == want else f"formula {to_text(c.f)!r}, role {role}: longest chain {got}, opt^G {want}"


def prop_lemma6(c: Case):
    for i in c.interps:
        d, dn, dnn = degree_g(c.f, i), degree_g(Not(c.f), i), degree_g(Not(Not(c.f)), i)
        if (d > 0) != (dn < 0):
            yield f"{_where(c.f, i)}: deg {d} and deg of negation {dn} have the same sign"
        elif dnn != d:
            yield f"{_where(c.f, i)}: double negation gives {dnn}, expected {d}"
        elif dn != -d:
            yield f"{_where(c.f, i)}: negation gives {dn}, expected {-d}"
        else:
            yield None


def prop_double_negation(c: Case):
    nn = Not(Not(c.f))
    for i in c.interps:
        d, dnn = degree(c.f, i), degree(nn, i)
        if dnn not in (1, INF) or (dnn == 1) != (d != INF):
            yield f"{_where(c.f, i)}: QCL degree of double negation is {format_degree(dnn)}"
        elif pqcl_degree(nn, i) != pqcl_degree(c.f, i):
            yield f"{_where(c.f, i)}: PQCL double negation changes the degree"
        elif degree_g(nn, i) != degree_g(c.f, i):
            yield f"{_where(c.f, i)}: GCL double negation changes the degree"
        else:
            yield None


def prop_double_negation_ng(c: Case):
    tree = build_ng_tree("P", Not(Not(c.f)))
    for i in c.interps:
        got = solve(tree, c.ng_payoff(tree, i)).value
        want = solve(c.ng_tree, c.ng_payoff(c.ng_tree, i)).value
        yield None if got == want else _mismatch(Not(Not(c.f)), i, want, got)


def _oracle(c: Case, tree, payoff_of, fmt=str):
    if max(count_strategies(tree, ME), count_strategies(tree, YOU)) > c.oracle_cap:
        return
    for i in c.interps:
        p = payoff_of(tree, i)
        value = solve(tree, p).value
        maxmin, minmax = oracle_values(tree, p, c.oracle_cap)
        ok = p.domain.key(maxmin) == p.domain.key(minmax) == p.domain.key(value)
        yield None if ok else (f"{_where(c.f, i)}: solve {fmt(value)}, maxmin {fmt(maxmin)}, "
                               f"minmax {fmt(minmax)}")


def prop_oracle_g(c: Case):
    yield from _oracle(c, c.g_tree, payoff_qcl, format_degree)


def prop_oracle_ng(c: Case):
    yield from _oracle(c, c.ng_tree, c.ng_payoff)


def prop_roundtrip(c: Case):
    text = to_text(c.f)
    yield None if parse(text) == c.f else f"formula {text!r} does not round-trip"


@dataclass(frozen=True)
class Property:
    name: str
    description: str
    check: Callable[[Case], Iterator[Optional[str]]]


PROPERTIES: Dict[str, Property] = {p.name: p for p in [
    Property("theorem1", "value of G(P:F, I) equals deg_I(F)", prop_theorem1),
    Property("theorem2", "value of NG(P:F, I) equals deg^G_I(F)", prop_theorem2),
    Property("opponent-g", "value of G(O:F, I) is inf if F holds, else 1", prop_opponent_g),
    Property("opponent-ng", "value of NG(O:F, I) equals -deg^G_I(F)", prop_opponent_ng),
    Property("lemma1", "deg_I(F) <= opt(F) or inf", prop_lemma1),
    Property("lemma1-gcl", "|deg^G_I(F)| <= opt^G(F)", prop_lemma1_g),
    Property("lemma2", "ordered disjunction is associative in QCL", prop_lemma2),
    Property("lemma3", "longest chain in T(P:F) has length opt(F)", prop_lemma3),
    Property("lemma4", "longest chain in NG trees has length opt^G(F)", prop_lemma4),
    Property("lemma5", "ordered disjunction is associative in GCL", prop_lemma5),
    Property("lemma6", "GCL negation flips sign and is involutive", prop_lemma6),
    Property("double-negation", "QCL collapses, PQCL and GCL preserve double negation", prop_double_negation),
    Property("double-negation-ng", "NG value of !!F equals that of F", prop_double_negation_ng),
    Property("oracle-g", "G: backward induction equals maxmin and minmax", prop_oracle_g),
    Property("oracle-ng", "NG: backward induction equals maxmin and minmax", prop_oracle_ng),
    Property("roundtrip", "parse(print(F)) = F", prop_roundtrip),
]}


@dataclass
class PropertyResult:
    name: str
    cases: int = 0
    failures: int = 0
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failures == 0


@dataclass
class Report:
    seed: int
    count: int
    results: List[PropertyResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def lines(self, verbose: bool = False) -> List[str]:
        out = []
        if verbose or not self.ok:
            for r in self.results:
                if r.ok:
                    out.append(f"PASS {r.name} ({r.cases} cases)")
                else:
                    out.append(f"FAIL {r.name} ({r.failures} of {r.cases} cases); "
                               f"counterexample: {r.counterexample}")
        if self.ok:
            out.append(f"all properties passed ({self.count} formulas)")
        else:
            failed = sum(not r.ok for r in self.results)
            out.append(f"{failed} properties failed (seed {self.seed}, {self.count} formulas)")
        return out


def check_property(prop: Property, cases: Sequence[Case]) -> PropertyResult:
    result = PropertyResult(prop.name)
    for case in cases:
        for problem in prop.check(case):
            result.cases += 1
            if problem is not None:
                result.failures += 1
                if result.counterexample is None:
                    result.counterexample = problem
    return result


def run_checks(seed: int = 7, count: int = 1000, max_connectives: int = 8,
               variables: Sequence[str] = ("a", "b", "c", "d"), properties: Sequence[str] = None,
               gcl_domain: Optional[Domain] = None, oracle_cap: int = ORACLE_CAP) -> Report:
    """Run the property suite on ``count`` random formulas drawn from ``seed``.

    ``gcl_domain`` replaces the payoff order used when solving NG games, which
    lets tests check that a corrupted order is caught.
    """
    formulas = make_corpus(seed, count, max_connectives, variables)
    cases = [Case(f, k, formulas, gcl_domain, oracle_cap) for k, f in enumerate(formulas)]
    names = list(PROPERTIES) if properties is None else list(properties)
    report = Report(seed, count)
    for name in names:
        report.results.append(check_property(PROPERTIES[name], cases))
    return report
