#!/usr/bin/env python3
"""
From words to matrices
======================

Evaluating a normal form in the projective matrix group always lands on
a hyperbolic element, and conjugating by the half-word involution sends
it to its inverse.  Traces stay exact no matter how large they get.
"""

from cuspcensus import (
    EpsilonSeq,
    GroupWord,
    classify,
    evaluate,
    reciprocal_word,
    reciprocity_check,
)

for text in ("a", "b", "ab", "aB"):
    w = GroupWord.from_string(text)
    print(f"{text:>2}: {classify(evaluate(w))}")

print()

for signs in [(1,), (1, -1), (1, 1, 1), (1, -1, 1, -1)]:
    form = reciprocal_word(EpsilonSeq(signs))
    m = evaluate(form.word)
    print(f"eps={signs}  |trace|={m.trace_abs}  {classify(m)}"
          f"  reciprocal={reciprocity_check(form.eps)}")

# constant signs give trace t^2 + 2; alternating signs grow geometrically
print()
for t in (10, 30, 60):
    const = evaluate(reciprocal_word(EpsilonSeq((1,) * t)).word)
    alt = evaluate(reciprocal_word(EpsilonSeq(tuple((-1) ** i for i in range(t)))).word)
    print(f"t={t:<3} constant-sign trace={const.trace_abs}")
    print(f"      alternating trace has {len(str(alt.trace_abs))} digits")
