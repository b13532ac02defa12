"""Quotient coalgebras ``C / im(r_L - r_R)``."""

from __future__ import annotations

from dataclasses import dataclass

from .coalg import Coalgebra, format_vector, tensor_names
from .exactlinalg import RatMatrix, Subspace, hstack, image_basis, kron
from .rel import Relation
from .validation import InvariantBreach, ValidationReport


@dataclass(frozen=True)
class QuotientResult:
    """A quotient coalgebra with its projection ``chi`` and a coset section.

    ``section`` sends each quotient basis element to the coordinate vector
    of C it was named after; ``chi @ section`` is the identity.
    """

    coideal: Subspace
    quotient: Coalgebra
    chi: RatMatrix
    section: RatMatrix


def coideal_check(c: Coalgebra, v: Subspace) -> ValidationReport:
    """Check ``eps(V) = 0`` and ``delta(V) <= C*V + V*C``."""
    n = c.dim
    if v.ambient_dim != n:
        raise ValueError(f"subspace lives in dim {v.ambient_dim}, coalgebra has dim {n}")
    report = ValidationReport(f"subspace of dim {v.dim}")
    eps_vals = c.eps @ v.basis
    report.checks["counit_vanishes"] = eps_vals.is_zero()
    if not report.checks["counit_vanishes"]:
        j = next(j for j in range(v.dim) if eps_vals[0, j])
        report.notes["counit_vanishes"] = f"eps({format_vector(v.basis.column_dict(j), c.basis_names)}) != 0"
    idc = c.identity()
    target = image_basis(hstack(kron(idc, v.basis), kron(v.basis, idc)))
    images = c.delta @ v.basis
    bad = [j for j in range(v.dim) if target.residue(images.column_dict(j))]
    report.checks["coproduct_contained"] = not bad
    if bad:
        report.notes["coproduct_contained"] = (
            f"delta({format_vector(v.basis.column_dict(bad[0]), c.basis_names)}) = "
            f"{format_vector(images.column_dict(bad[0]), tensor_names(c.basis_names, c.basis_names))}"
            " leaves C*V + V*C"
        )
    return report


def quotient_by_coideal(c: Coalgebra, v: Subspace) -> QuotientResult:
    """Coalgebra structure on C/V, with cosets represented on non-pivot coordinates."""
    report = coideal_check(c, v)
    if not report.valid:
        raise InvariantBreach(f"not a coideal: {'; '.join(report.notes.values())}")
    n = c.dim
    pivots = set(v.pivots)
    keep = [i for i in range(n) if i not in pivots]
    pos = {i: k for k, i in enumerate(keep)}
    k = len(keep)
    chi_cols = []
    for i in range(n):
        residue = v.residue({i: 1})
        chi_cols.append({pos[j]: q for j, q in residue.items()})
    chi = RatMatrix(n, k, chi_cols).T
    section = RatMatrix.identity(n).take_columns(keep)
    delta_q = kron(chi, chi) @ c.delta @ section
    eps_q = c.eps @ section
    names = ["u"] if k == 1 else [f"q{i}" for i in range(k)]
    quotient = Coalgebra(tuple(names), delta_q, eps_q)
    # independence of the section: chi must intertwine the structure maps
    if kron(chi, chi) @ c.delta != delta_q @ chi or c.eps != eps_q @ chi:
        raise InvariantBreach("projection onto the quotient is not a coalgebra map")
    return QuotientResult(v, quotient, chi, section)


def coideal_of(rel: Relation) -> Subspace:
    return image_basis(rel.r_left - rel.r_right)


def quotient(rel: Relation) -> QuotientResult:
    """Coequaliser of ``r_L`` and ``r_R``: the coalgebra ``C / im(r_L - r_R)``."""
    return quotient_by_coideal(rel.coalgebra, coideal_of(rel))


def is_coalgebra_map(f: RatMatrix, src: Coalgebra, dst: Coalgebra) -> bool:
    return dst.delta @ f == kron(f, f) @ src.delta and dst.eps @ f == src.eps


__all__ = [
    "QuotientResult",
    "coideal_check",
    "coideal_of",
    "is_coalgebra_map",
    "quotient",
    "quotient_by_coideal",
]
