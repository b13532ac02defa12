"""Bicomodules over a coalgebra, sub-bicomodules of C*C, cotensor products."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coalg import Coalgebra, format_vector, tensor_names
from .exactlinalg import (
    RatMatrix,
    Subspace,
    first_column_outside,
    image_basis,
    kernel_basis,
    kron,
    rank,
    solve_right,
)
from .validation import MalformedError, ValidationReport


@dataclass(frozen=True)
class Bicomodule:
    """C-bicomodule of dimension m.

    ``left`` is the left coaction R -> C*R (n*m x m) and ``right`` the right
    coaction R -> R*C (m*n x m).
    """

    coalgebra: Coalgebra
    left: RatMatrix
    right: RatMatrix
    basis_names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "basis_names", tuple(self.basis_names))
        n, m = self.coalgebra.dim, len(self.basis_names)
        if len(set(self.basis_names)) != m:
            raise MalformedError("duplicate bicomodule basis names")
        if self.left.shape != (n * m, m):
            raise MalformedError(f"left coaction must be {n * m}x{m}, got {self.left.shape}")
        if self.right.shape != (m * n, m):
            raise MalformedError(f"right coaction must be {m * n}x{m}, got {self.right.shape}")

    @property
    def dim(self) -> int:
        return len(self.basis_names)


class NotSubBicomodule(ValueError):
    """A subspace of C*C is not closed under one of the coactions.

    ``side`` is ``"left"`` or ``"right"``; ``index`` is the offending basis
    vector of the subspace and ``vector`` its description.
    """

    def __init__(self, side: str, index: int, vector: str):
        self.side = side
        self.index = index
        self.vector = vector
        target = "C*W" if side == "left" else "W*C"
        super().__init__(f"{side} coaction leaves {target} on basis vector {index} ({vector})")


def regular_bicomodule(c: Coalgebra) -> Bicomodule:
    """C as a bicomodule over itself, both coactions equal to delta."""
    return Bicomodule(c, c.delta, c.delta, c.basis_names)


def validate_bicomodule(b: Bicomodule) -> ValidationReport:
    c = b.coalgebra
    idc, idr = c.identity(), RatMatrix.identity(b.dim)
    report = ValidationReport(f"bicomodule of dim {b.dim}")
    report.checks["left_coassociativity"] = kron(c.delta, idr) @ b.left == kron(idc, b.left) @ b.left
    report.checks["left_counit"] = kron(c.eps, idr) @ b.left == idr
    report.checks["right_coassociativity"] = kron(b.right, idc) @ b.right == kron(idr, c.delta) @ b.right
    report.checks["right_counit"] = kron(idr, c.eps) @ b.right == idr
    report.checks["compatibility"] = kron(idc, b.right) @ b.left == kron(b.left, idc) @ b.right
    return report


def induce_from_subspace(
    c: Coalgebra, w: Subspace | RatMatrix, names: Sequence[str] | None = None
) -> tuple[Bicomodule, RatMatrix]:
    """Restrict ``delta*id`` and ``id*delta`` to a subspace W of C*C.

    ``w`` is either a :class:`Subspace` (its canonical basis is used) or a
    matrix whose linearly independent columns are taken as the basis of W in
    the given order.  Returns the bicomodule and the inclusion W -> C*C.
    Raises :class:`NotSubBicomodule` if W is not closed under both coactions.
    """
    n = c.dim
    basis = w.basis if isinstance(w, Subspace) else w
    if basis.rows != n * n:
        raise MalformedError(f"subspace must live in C*C of dim {n * n}")
    m = basis.cols
    if rank(basis) != m:
        raise MalformedError("spanning vectors are linearly dependent")
    if names is None:
        names = [f"r{i}" for i in range(m)]
    idc = c.identity()
    pair_names = tensor_names(c.basis_names, c.basis_names)
    left_target = kron(idc, basis)
    left_image = kron(c.delta, idc) @ basis
    left = solve_right(left_target, left_image)
    if left is None:
        j = first_column_outside(left_target, left_image)
        raise NotSubBicomodule("left", j, format_vector(basis.column_dict(j), pair_names))
    right_target = kron(basis, idc)
    right_image = kron(idc, c.delta) @ basis
    right = solve_right(right_target, right_image)
    if right is None:
        j = first_column_outside(right_target, right_image)
        raise NotSubBicomodule("right", j, format_vector(basis.column_dict(j), pair_names))
    return Bicomodule(c, left, right, tuple(names)), basis


def generate_sub_bicomodule(c: Coalgebra, vectors: RatMatrix) -> Subspace:
    """Smallest sub-bicomodule of C*C containing the given columns.

    Spanned by the contractions ``(phi * id * id * psi)(delta * delta)(v)``
    over coordinate functionals ``phi``, ``psi``.
    """
    n = c.dim
    n2 = n * n
    dd = kron(c.delta, c.delta) @ vectors  # (C*C)*(C*C) reordered as C*C*C*C
    pieces = []
    for j in range(dd.cols):
        col = dd.column_dict(j)
        for i in range(n):
            for k in range(n):
                piece = {}
                for idx, v in col.items():
                    a, rest = divmod(idx, n * n2)
                    mid, d = divmod(rest, n)
                    if a == i and d == k:
                        piece[mid] = v
                if piece:
                    pieces.append(piece)
    if not pieces:
        return Subspace.zero(n2)
    mat = RatMatrix(len(pieces), n2, pieces).T
    return image_basis(mat)


@dataclass(frozen=True)
class CotensorSpace:
    """The equaliser of ``rho_R * id`` and ``id * lambda_S`` inside R*S."""

    left_factor: Bicomodule
    right_factor: Bicomodule
    inclusion: Subspace

    @property
    def dim(self) -> int:
        return self.inclusion.dim

    @property
    def basis(self) -> RatMatrix:
        return self.inclusion.basis

    def basis_names(self) -> list[str]:
        return tensor_names(self.left_factor.basis_names, self.right_factor.basis_names)


def cotensor_defining_matrix(r: Bicomodule, s: Bicomodule) -> RatMatrix:
    """``(rho_R * id_S) - (id_R * lambda_S)`` as an (m1*n*m2) x (m1*m2) matrix."""
    return kron(r.right, RatMatrix.identity(s.dim)) - kron(RatMatrix.identity(r.dim), s.left)


def cotensor(r: Bicomodule, s: Bicomodule) -> CotensorSpace:
    if r.coalgebra != s.coalgebra:
        raise MalformedError("cotensor factors live over different coalgebras")
    return CotensorSpace(r, s, kernel_basis(cotensor_defining_matrix(r, s)))


def cotensor_restriction(f: RatMatrix, g: RatMatrix, ct: CotensorSpace) -> RatMatrix:
    """Matrix of ``f * g`` restricted to the cotensor product."""
    if f.cols != ct.left_factor.dim or g.cols != ct.right_factor.dim:
        raise MalformedError(
            f"maps with {f.cols} and {g.cols} inputs do not fit factors of dim "
            f"{ct.left_factor.dim} and {ct.right_factor.dim}"
        )
    return kron(f, g) @ ct.basis
