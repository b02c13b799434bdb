"""
The evaluation game for choice formulas
=======================================

Me (the proponent) tries to verify a formula, You try to falsify it.
Outcomes are ranked by a preference order, and the value of the game
under optimal play equals the satisfaction degree.
"""

from qclgame import (build_qcl_tree, degree, format_degree, parse, payoff_qcl,
                     solve, to_dot)
from qclgame.syntax import parse_interpretation

f = parse("((a><b)><c) & !(a><d)")

# the game tree: one node per position, owner I (Me) or Y (You)
tree = build_qcl_tree("P", f)
for node in tree.nodes:
    owner = "leaf" if node.is_leaf else f"owner {node.label}"
    print(f"n{node.id:<2} {node.caption:30} {owner:8} children {list(node.children)}")

# payoffs and the optimal value under two interpretations
for text in ("a", "b"):
    i = parse_interpretation(text)
    p = payoff_qcl(tree, i)
    sol = solve(tree, p)
    leaves = ", ".join(f"{tree[n].caption}={format_degree(p[n])}" for n in tree.leaves)
    print(f"\nover {{{text}}}: {leaves}")
    print("game value", format_degree(sol.value), "degree", format_degree(degree(f, i)))

# the annotated tree can be rendered with graphviz (dot -Tpng)
with open("game_g.dot", "w") as fh:
    fh.write(to_dot(tree, payoff_qcl(tree, parse_interpretation("b")), format_degree, name="G"))
print("\nwrote game_g.dot")
