"""Relations on coalgebras and the decision procedures for their properties.

A relation on C is a bicomodule R with a bicolinear map ``r: R -> C*C``.
Reflexivity, symmetry and transitivity each ask for a linear map solving a
linear equation; anti-symmetry quantifies over all pairs ``f, g`` with
``r f = sigma r g``, which is decided on the universal such pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .coalg import Coalgebra, flip, format_vector, tensor_names
from .comod import (
    Bicomodule,
    CotensorSpace,
    cotensor,
    cotensor_restriction,
    induce_from_subspace,
    regular_bicomodule,
    validate_bicomodule,
)
from .exactlinalg import (
    RatMatrix,
    Subspace,
    first_column_outside,
    hstack,
    kernel_basis,
    kron,
    rank,
    solve_right,
)
from .validation import MalformedError, ValidationReport

EQUIVALENCE = "Equivalence"
ORDER = "Order"
NEITHER = "Neither"


@dataclass(frozen=True)
class Relation:
    bicomodule: Bicomodule
    r: RatMatrix

    def __post_init__(self):
        n, m = self.coalgebra.dim, self.bicomodule.dim
        if self.r.shape != (n * n, m):
            raise MalformedError(f"r must be {n * n}x{m}, got {self.r.shape}")

    @property
    def coalgebra(self) -> Coalgebra:
        return self.bicomodule.coalgebra

    @property
    def dim(self) -> int:
        return self.bicomodule.dim

    @cached_property
    def r_left(self) -> RatMatrix:
        """``(id * eps) r``, the first leg."""
        c = self.coalgebra
        return kron(c.identity(), c.eps) @ self.r

    @cached_property
    def r_right(self) -> RatMatrix:
        """``(eps * id) r``, the second leg."""
        c = self.coalgebra
        return kron(c.eps, c.identity()) @ self.r

    @cached_property
    def kappa(self) -> RatMatrix:
        c = self.coalgebra
        return kron(c.eps, c.eps) @ self.r

    @cached_property
    def is_injective(self) -> bool:
        return rank(self.r) == self.dim


def relation_from_subspace(
    c: Coalgebra, w: Subspace | RatMatrix, names: Sequence[str] | None = None
) -> Relation:
    """Sub-bicomodule W of C*C with its inclusion as the relation map."""
    b, incl = induce_from_subspace(c, w, names)
    return Relation(b, incl)


def diagonal_relation(c: Coalgebra) -> Relation:
    return Relation(regular_bicomodule(c), c.delta)


def relation_from_kappa(b: Bicomodule, kappa: RatMatrix) -> Relation:
    """``r = (id * kappa * id)(lambda * id) rho`` for a functional ``kappa`` on R."""
    c = b.coalgebra
    if kappa.shape != (1, b.dim):
        raise MalformedError(f"kappa must be 1x{b.dim}")
    idc = c.identity()
    r = kron(kron(idc, kappa), idc) @ kron(b.left, idc) @ b.right
    return Relation(b, r)


def validate_relation(rel: Relation) -> ValidationReport:
    c, b = rel.coalgebra, rel.bicomodule
    idc = c.identity()
    report = ValidationReport(f"relation of dim {rel.dim}")
    for key, ok in validate_bicomodule(b).checks.items():
        report.checks[key] = ok
    report.checks["left_colinear"] = kron(c.delta, idc) @ rel.r == kron(idc, rel.r) @ b.left
    report.checks["right_colinear"] = kron(idc, c.delta) @ rel.r == kron(rel.r, idc) @ b.right
    report.checks["kappa_reconstruction"] = relation_from_kappa(b, rel.kappa).r == rel.r
    return report


@dataclass
class CheckResult:
    """Outcome of one property check.

    ``witness`` is the solving map when the property holds.  On failure
    ``counterexample`` is a column vector (in the space named by ``detail``)
    demonstrating the obstruction.
    """

    name: str
    holds: bool
    witness: RatMatrix | None = None
    counterexample: RatMatrix | None = None
    detail: str = ""
    data: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds


def check_reflexive(rel: Relation) -> CheckResult:
    """Find ``delta_w: C -> R`` with ``r delta_w = Delta_C``."""
    c = rel.coalgebra
    witness = solve_right(rel.r, c.delta)
    if witness is not None:
        return CheckResult("reflexive", True, witness=witness)
    j = first_column_outside(rel.r, c.delta)
    pairs = tensor_names(c.basis_names, c.basis_names)
    return CheckResult(
        "reflexive",
        False,
        counterexample=RatMatrix.unit_vector(c.dim, j),
        detail=f"Delta({c.basis_names[j]}) = {format_vector(c.delta.column_dict(j), pairs)} is not in im r",
    )


def check_symmetric(rel: Relation) -> CheckResult:
    """Find ``tau: R -> R`` with ``r tau = sigma r``."""
    n = rel.coalgebra.dim
    flipped = flip(n, n) @ rel.r
    witness = solve_right(rel.r, flipped)
    if witness is not None:
        return CheckResult("symmetric", True, witness=witness)
    j = first_column_outside(rel.r, flipped)
    return CheckResult(
        "symmetric",
        False,
        counterexample=RatMatrix.unit_vector(rel.dim, j),
        detail=f"sigma r({rel.bicomodule.basis_names[j]}) is not in im r",
    )


def check_transitive(rel: Relation, ct: CotensorSpace | None = None) -> CheckResult:
    """Find ``pi: R[]R -> R`` with ``r pi = (r_L [] r_R)``."""
    if ct is None:
        ct = cotensor(rel.bicomodule, rel.bicomodule)
    target = cotensor_restriction(rel.r_left, rel.r_right, ct)
    witness = solve_right(rel.r, target)
    data = {"cotensor_dim": ct.dim}
    if witness is not None:
        return CheckResult("transitive", True, witness=witness, data=data)
    j = first_column_outside(rel.r, target)
    vec = ct.basis.take_columns([j])
    return CheckResult(
        "transitive",
        False,
        counterexample=vec,
        detail=f"(r_L * r_R)({format_vector(vec, ct.basis_names())}) is not in im r",
        data=data,
    )


def universal_pair_space(rel: Relation) -> Subspace:
    """``K = {(a, b) in R + R : r a = sigma r b}``; first m coordinates are ``a``."""
    n = rel.coalgebra.dim
    return kernel_basis(hstack(rel.r, -(flip(n, n) @ rel.r)))


def check_antisymmetric(rel: Relation) -> CheckResult:
    """``r_L f = r_L g`` and ``r_R f = r_R g`` for every pair with ``r f = sigma r g``.

    Every such pair factors through the projections of the universal pair
    space, and the projections themselves form such a pair, so it suffices to
    test the projections.
    """
    m = rel.dim
    k = universal_pair_space(rel)
    p1 = k.basis.take_rows(range(m))
    p2 = k.basis.take_rows(range(m, 2 * m))
    data = {"pair_space_dim": k.dim}
    for leg, name in ((rel.r_left, "r_L"), (rel.r_right, "r_R")):
        diff = leg @ p1 - leg @ p2
        if not diff.is_zero():
            j = next(j for j in range(diff.cols) if diff.column_dict(j))
            vec = k.basis.take_columns([j])
            names = rel.bicomodule.basis_names
            a = format_vector(p1.column_dict(j), names)
            b = format_vector(p2.column_dict(j), names)
            return CheckResult(
                "antisymmetric",
                False,
                counterexample=vec,
                detail=f"pair ({a}, {b}) has {name} a != {name} b",
                data=data,
            )
    return CheckResult("antisymmetric", True, data=data)


def _is_bicolinear_into_r(rel: Relation, f: RatMatrix, left_src: RatMatrix, right_src: RatMatrix) -> bool:
    # f: S -> R, with S carrying the given coactions
    b, idc = rel.bicomodule, rel.coalgebra.identity()
    return b.left @ f == kron(idc, f) @ left_src and b.right @ f == kron(f, idc) @ right_src


def _cotensor_coactions(ct: CotensorSpace) -> tuple[RatMatrix, RatMatrix] | None:
    b = ct.left_factor
    idc, idr = b.coalgebra.identity(), RatMatrix.identity(b.dim)
    # lambda_R * id lands in C*R*R; rho: id * rho_R lands in R*R*C
    left = solve_right(kron(idc, ct.basis), kron(b.left, idr) @ ct.basis)
    right = solve_right(kron(ct.basis, idc), kron(idr, ct.right_factor.right) @ ct.basis)
    if left is None or right is None:
        return None
    return left, right


@dataclass
class Classification:
    reflexive: CheckResult
    symmetric: CheckResult
    transitive: CheckResult
    antisymmetric: CheckResult
    injective: bool
    supplementary: dict = field(default_factory=dict)

    @property
    def flags(self) -> dict[str, bool]:
        return {
            "reflexive": self.reflexive.holds,
            "symmetric": self.symmetric.holds,
            "transitive": self.transitive.holds,
            "antisymmetric": self.antisymmetric.holds,
        }

    @property
    def is_equivalence(self) -> bool:
        return self.reflexive.holds and self.symmetric.holds and self.transitive.holds

    @property
    def is_order(self) -> bool:
        return self.reflexive.holds and self.antisymmetric.holds and self.transitive.holds

    @property
    def verdict(self) -> str:
        # a relation can be both (e.g. the diagonal of a cocommutative C); equivalence wins
        if self.is_equivalence:
            return EQUIVALENCE
        if self.is_order:
            return ORDER
        return NEITHER

    @property
    def delta(self) -> RatMatrix | None:
        return self.reflexive.witness

    @property
    def tau(self) -> RatMatrix | None:
        return self.symmetric.witness

    @property
    def pi(self) -> RatMatrix | None:
        return self.transitive.witness

    def flag_string(self) -> str:
        f = self.flags
        return " ".join(f"{k[0]}{'+' if f[k] else '-'}" for k in ("reflexive", "symmetric", "transitive", "antisymmetric"))


def classify(rel: Relation, validate: bool = True) -> Classification:
    if validate:
        validate_relation(rel).require()
    ct = cotensor(rel.bicomodule, rel.bicomodule)
    result = Classification(
        reflexive=check_reflexive(rel),
        symmetric=check_symmetric(rel),
        transitive=check_transitive(rel, ct),
        antisymmetric=check_antisymmetric(rel),
        injective=rel.is_injective,
    )
    c, b = rel.coalgebra, rel.bicomodule
    sup = result.supplementary
    if result.delta is not None:
        sup["delta_bicolinear"] = _is_bicolinear_into_r(rel, result.delta, c.delta, c.delta)
    if result.tau is not None:
        sup["tau_involution"] = result.tau @ result.tau == RatMatrix.identity(rel.dim)
        sup["tau_bicolinear"] = _is_bicolinear_into_r(rel, result.tau, b.left, b.right)
    if result.pi is not None:
        coactions = _cotensor_coactions(ct)
        sup["pi_bicolinear"] = coactions is not None and _is_bicolinear_into_r(rel, result.pi, *coactions)
    return result
