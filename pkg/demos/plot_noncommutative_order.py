"""
An order on a non-cocommutative coalgebra
=========================================

Three basis vectors x, y, z with x and z grouplike and
delta(y) = x*y + y*z.  A five-dimensional sub-bicomodule of C*C turns
out to be reflexive, transitive and antisymmetric, but not symmetric.
"""

from coalrel import classify, cotensor, quotient, validate_coalgebra, validate_relation
from coalrel.catalog import order3_relation

rel = order3_relation()
c = rel.coalgebra
print("coalgebra valid:", validate_coalgebra(c).valid)
print("relation valid: ", validate_relation(rel).valid)

# the two legs of r on the basis x*x, z*z, x*y + y*z, y*x, z*x
print("r_L =", rel.r_left.to_strings())
print("r_R =", rel.r_right.to_strings())

cl = classify(rel)
print(cl.flag_string(), "->", cl.verdict)
print("why not symmetric:", cl.symmetric.detail)

# R[]R, the space on which transitivity is tested
ct = cotensor(rel.bicomodule, rel.bicomodule)
print("dim R[]R =", ct.dim)

# collapsing by the relation leaves a single grouplike point
q = quotient(rel)
print("quotient dim", q.quotient.dim, "chi =", q.chi.to_strings())
