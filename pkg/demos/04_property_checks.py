"""
Checking the adequacy results on random formulas
================================================

The check runner builds a seeded corpus and compares game values with
degrees, plus a handful of structural properties, on every interpretation.
"""

import time

from qclgame.checks import PROPERTIES, run_checks

start = time.perf_counter()
report = run_checks(seed=7, count=300)
print(f"checked in {time.perf_counter() - start:.2f}s")
for line in report.lines(verbose=True):
    print(line)

# descriptions of what each property asserts
for name, prop in PROPERTIES.items():
    print(f"{name:20} {prop.description}")
