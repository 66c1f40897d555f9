#!/usr/bin/env python3
"""
Asymptotic shape of the census columns
======================================

At depth threshold 1 the census column for 2n excursions is a binomial
coefficient, so the ratio to t^(2n) tends to 1/(2n)!.  For exactly two
excursions past a general depth D the count grows like a constant times
t * alpha_D^t, and the rigorous sandwich bounds trap it at every t.
"""

import math
from fractions import Fraction

from cuspcensus import (
    bounds_two_excursions,
    count_exact_excursions,
    limit_constant,
)

print("depth one: count / t^(2n) against 1/(2n)!")
for n in (1, 2):
    target = Fraction(1, math.factorial(2 * n))
    for t in (100, 1000, 10000):
        ratio = Fraction(count_exact_excursions(t, n, 1), t ** (2 * n))
        print(f"  n={n} t={t:<6} ratio={float(ratio):.8f}  limit={float(target):.8f}")

print()

D = 2
lim = limit_constant("two_excursions_D", D)
print(f"two excursions past D={D}: limit constant ~ {float(lim.midpoint()):.10f}")
for t in (50, 100, 200):
    low, high = bounds_two_excursions(t, D)
    count = count_exact_excursions(t, 1, D)
    print(f"  t={t:<4} lower={float(low):.1f}  count={count}  upper={float(high):.1f}")
