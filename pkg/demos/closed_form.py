#!/usr/bin/env python3
"""
A closed form for the low-lying census
======================================

The bounded-part counts satisfy a depth-D linear recurrence whose
dominant root alpha_D lies strictly between 2(1 - 2^-D) and 2.  The
full count is literally the nearest integer to d_D * alpha_D^t, and
interval arithmetic certifies the rounding at every t.
"""

from fractions import Fraction

from cuspcensus import closed_form_count, coefficient_d, count_bounded, solve_alpha

for D in (2, 3, 5, 8):
    alpha = solve_alpha(D, Fraction(1, 10**15))
    d = coefficient_d(D, Fraction(1, 10**15))
    print(f"D={D}: alpha in [{float(alpha.lo):.12f}, {float(alpha.hi):.12f}]"
          f"  d in [{float(d.lo):.12f}, {float(d.hi):.12f}]")

print()

D = 3
for t in (10, 50, 250):
    exact = count_bounded(t, D)
    rounded = closed_form_count(t, D)
    print(f"t={t:<4} exact={exact}")
    print(f"      rounded closed form agrees: {rounded == exact}")
