"""
The diagonal relation
=====================

(C, delta) is always an order.  It is an equivalence exactly when C is
cocommutative.
"""

from coalrel import classify, diagonal_relation, grouplike_coalgebra, is_cocommutative, quotient
from coalrel.catalog import path_coalgebra3

for c in (grouplike_coalgebra("abc"), path_coalgebra3()):
    cl = classify(diagonal_relation(c))
    print("basis", " ".join(c.basis_names), "cocommutative:", is_cocommutative(c))
    print("  ", cl.flag_string(), "->", cl.verdict)

# r_L = r_R, so nothing is identified
q = quotient(diagonal_relation(path_coalgebra3()))
print("coideal dim", q.coideal.dim, "quotient dim", q.quotient.dim)
