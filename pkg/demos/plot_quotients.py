"""
Quotients by arbitrary relations
================================

Any relation defines a coideal im(r_L - r_R), so the quotient exists
even when the relation is not an equivalence.
"""

from coalrel import RatMatrix, coideal_check, image_basis, matrix_coalgebra, quotient, relation_from_kappa
from coalrel.catalog import order3_relation

rel = order3_relation()
q = quotient(rel)
print("coideal basis:", q.coideal.basis.to_strings())
print("chi:", q.chi.to_strings())

# a different functional on the same bicomodule gives a different relation
other = relation_from_kappa(rel.bicomodule, RatMatrix.from_rows([[1, 1, 0, 0, 0]]))
print("quotient dim for the new kappa:", quotient(other).quotient.dim)

# not every counit-free subspace is a coideal
m = matrix_coalgebra(2)
report = coideal_check(m, image_basis(RatMatrix.column_vector([1, 0, 0, -1])))
print(report.failed, report.notes)
