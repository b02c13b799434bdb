"""
Keeping preferences under negation
==================================

Under the alternative semantics negation swaps the roles of the players
but keeps the order among options. Degrees are nonzero integers: positive
means satisfied, negative means falsified, and values closer to zero are
more extreme.
"""

from qclgame import build_ng_tree, degree_g, parse, payoff_ng, pqcl_degree, solve
from qclgame.gcl import leq_g
from qclgame.syntax import parse_interpretation

f = parse("((a><b)><c) & !(a><d)")
tree = build_ng_tree("P", f)

for text in ("a", "d"):
    i = parse_interpretation(text)
    p = payoff_ng(tree, i)
    leaves = ", ".join(f"{tree[n].caption}={p[n]}" for n in tree.leaves)
    print(f"over {{{text}}}: {leaves}")
    print("   game value", solve(tree, p).value, "degree", degree_g(f, i))

# the payoff order: 1 is best, -1 is worst
print("\n-2 below -3?", leq_g(-2, -3), "   -3 below -2?", leq_g(-3, -2))

# double negation is harmless here, unlike in the original semantics
g = parse("a >< b")
for text in ("", "a", "b"):
    i = parse_interpretation(text)
    print(f"{{{text}}}: deg {degree_g(g, i)}, deg of !!g {degree_g(parse('!!(a><b)'), i)},"
          f" pqcl {pqcl_degree(parse('!!(a><b)'), i)}")
