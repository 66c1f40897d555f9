#!/usr/bin/env python3
"""
Census by number of deep excursions
===================================

Fix a depth threshold D.  Each class at word length 4t has some number
2n of excursions deeper than D, and the counts over n partition the
2^(t-1) classes.  The n = 0 column is the low-lying census.
"""

from cuspcensus import excursion_census, count_bounded

D = 2
print(f"depth threshold D={D}")
print(f"{'t':>3} {'total':>8}  counts by n")
for t in range(1, 13):
    rows = excursion_census(t, D)
    total = sum(r.count for r in rows)
    assert total == 2 ** (t - 1)
    print(f"{t:>3} {total:>8}  {[r.count for r in rows]}")

print()

# the n = 0 entry matches the bounded-part count directly
for t in (5, 10, 20, 40):
    low = excursion_census(t, D)[0].count
    print(f"t={t:<3} low-lying={low}  bounded-parts={count_bounded(t, D)}")
