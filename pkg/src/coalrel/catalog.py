"""Ready-made coalgebras and relations used in tests and demos."""

from __future__ import annotations

from .coalg import Coalgebra
from .exactlinalg import RatMatrix
from .rel import Relation, relation_from_subspace

# vectors of C*C for the three-point path coalgebra, basis order x, y, z
ORDER3_SPAN = (
    {"x*x": 1},
    {"z*z": 1},
    {"x*y": 1, "y*z": 1},
    {"y*x": 1},
    {"z*x": 1},
)


def path_coalgebra3() -> Coalgebra:
    """Non-cocommutative coalgebra on x, y, z with ``delta(y) = x*y + y*z``.

    x and z are grouplike and ``eps(y) = 0``.
    """
    return Coalgebra.from_tables(
        "xyz",
        {
            "x": [(1, "x", "x")],
            "y": [(1, "x", "y"), (1, "y", "z")],
            "z": [(1, "z", "z")],
        },
        {"x": 1, "y": 0, "z": 1},
    )


def tensor_vector(c: Coalgebra, terms: dict[str, object]) -> RatMatrix:
    """Column vector of C*C from ``{"a*b": coef}``."""
    n = c.dim
    entries = {}
    for key, coef in terms.items():
        a, b = key.split("*")
        entries[(c.index(a) * n + c.index(b), 0)] = coef
    return RatMatrix.from_entries(n * n, 1, entries)


def order3_relation() -> Relation:
    """Five-dimensional order on :func:`path_coalgebra3`, r the inclusion."""
    c = path_coalgebra3()
    n = c.dim
    cols = [tensor_vector(c, t).column(0) for t in ORDER3_SPAN]
    return relation_from_subspace(c, RatMatrix.from_columns(cols, rows=n * n))
