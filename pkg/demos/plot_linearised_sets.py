"""
Set relations seen as coalgebra relations
=========================================

Every element of a finite set becomes a grouplike vector and every pair
(a, b) the tensor a*b.  The four properties survive the passage.
"""

import random

from coalrel import FinSetRelation, classify, linearise, oracle_check, quotient, quotient_set

le3 = FinSetRelation.of("123", [(a, b) for a in "123" for b in "123" if a <= b])
_, rel = linearise(le3)
print("<= on {1,2,3}:", classify(rel).verdict)

s = FinSetRelation.of("1234", [("1", "2"), ("3", "4")])
_, rel = linearise(s)
print("classes of the closure:", quotient_set(s))
print("quotient coalgebra dim:", quotient(rel).quotient.dim)

# compare with brute force on a handful of random relations
rng = random.Random(1)
for _ in range(5):
    els = [str(i) for i in range(1, rng.randint(2, 5))]
    s = FinSetRelation.of(els, [(a, b) for a in els for b in els if rng.random() < 0.4])
    _, rel = linearise(s)
    same = classify(rel).flags == oracle_check(s).flags
    print(len(s.elements), "points,", len(s.pairs), "pairs, agrees with oracle:", same)
