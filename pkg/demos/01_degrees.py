"""
Satisfaction degrees and preferred models
=========================================

Ordered disjunction ``a >< b`` reads "a if possible, otherwise b".
Degrees rank how well an interpretation satisfies a formula.
"""

from qclgame import all_interpretations, degree, format_degree, parse, pqcl_degree, preferred_models
from qclgame.syntax import format_interpretation

# a small truth table under three readings of negation
rows = [("a >< b", degree), ("!a & !b", degree), ("!(a >< b)", pqcl_degree)]
f = parse("a >< b")
print("I       " + "".join(f"{text:>12}" for text, _ in rows))
for i in all_interpretations(f):
    cells = [format_degree(fn(parse(text), i)) for text, fn in rows]
    print(f"{format_interpretation(i):8}" + "".join(f"{c:>12}" for c in cells))

# choosing a trip: travel somewhere, preferably to the mountains
trip = parse("t & (m >< a)")
best, models = preferred_models(trip)
print("\npreferred degree", best)
for m in sorted(models, key=sorted):
    print("  ", format_interpretation(m))

# adding a constraint shifts the preferred models
f = parse("((a&b) >< a >< b) & !(a&b)")
print("\nwith a&b ruled out:", [format_interpretation(m) for m in preferred_models(f)[1]])
