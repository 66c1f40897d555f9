#!/usr/bin/env python3
"""
Normal forms and their pairing under cyclic conjugacy
=====================================================

Every sign tuple eps of length t yields a word of syllable length 4t
whose second half mirrors the first with flipped signs.  Distinct
tuples can still name the same closed loop: up to rotation the 2^t
words collapse into 2^(t-1) classes, always two tuples per class.
"""

from collections import Counter

from cuspcensus import EpsilonSeq, canonical_cyclic_form, reciprocal_word, run_sequence

for signs in [(1,), (1, 1, -1), (-1, -1, 1)]:
    form = reciprocal_word(EpsilonSeq(signs))
    print(f"eps={signs}  word={form.word}  runs={run_sequence(form.eps).parts}")

print()

t = 5
classes = Counter()
for mask in range(2**t):
    eps = EpsilonSeq(tuple(1 - 2 * ((mask >> i) & 1) for i in range(t)))
    classes[canonical_cyclic_form(reciprocal_word(eps).word)] += 1

print(f"t={t}: {2**t} tuples, {len(classes)} cyclic classes")
print("class sizes:", dict(Counter(classes.values())))

# the partner of eps is its reversal with all signs flipped
eps = EpsilonSeq((1, 1, -1, 1, -1))
partner = EpsilonSeq(tuple(-s for s in reversed(eps.signs)))
same = canonical_cyclic_form(reciprocal_word(eps).word) == canonical_cyclic_form(
    reciprocal_word(partner).word
)
print(f"{eps.signs} pairs with {partner.signs}: {same}")
