"""
Cotensor products
=================

R[]R is the part of R*R where the right coaction of the first factor
meets the left coaction of the second.  For a set relation it is spanned
by composable pairs.
"""

from coalrel import FinSetRelation, cotensor, linearise, regular_bicomodule
from coalrel.catalog import path_coalgebra3

s = FinSetRelation.of("abc", [("a", "b"), ("b", "c"), ("b", "b")])
_, rel = linearise(s)
ct = cotensor(rel.bicomodule, rel.bicomodule)
names = ct.basis_names()
for j in range(ct.dim):
    (idx,) = ct.basis.column_dict(j)
    print("composable:", names[idx])

# C[]C is a copy of C, embedded by delta
c = path_coalgebra3()
b = regular_bicomodule(c)
print("dim C[]C =", cotensor(b, b).dim, "= dim C =", c.dim)
