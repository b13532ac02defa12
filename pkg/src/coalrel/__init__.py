"""Relations, orders and equivalences on finite-dimensional coalgebras over Q."""

from .coalg import (
    Coalgebra,
    divided_power_coalgebra,
    flip,
    grouplike_coalgebra,
    is_cocommutative,
    matrix_coalgebra,
    validate_coalgebra,
)
from .comod import (
    Bicomodule,
    CotensorSpace,
    NotSubBicomodule,
    cotensor,
    cotensor_restriction,
    generate_sub_bicomodule,
    induce_from_subspace,
    regular_bicomodule,
    validate_bicomodule,
)
from .exactlinalg import (
    RatMatrix,
    Subspace,
    image_basis,
    kernel_basis,
    kron,
    member,
    parse_rational,
    rank,
    rref,
    solve_right,
    subspace_leq,
    subspace_sum,
)
from .quot import QuotientResult, coideal_check, quotient, quotient_by_coideal
from .rel import (
    CheckResult,
    Classification,
    Relation,
    check_antisymmetric,
    check_reflexive,
    check_symmetric,
    check_transitive,
    classify,
    diagonal_relation,
    relation_from_kappa,
    relation_from_subspace,
    validate_relation,
)
from .setrel import (
    FinSetRelation,
    equivalence_closure,
    linearise,
    oracle_check,
    quotient_set,
)
from .validation import InvalidStructureError, InvariantBreach, MalformedError, ValidationReport

__version__ = "0.1.0"
