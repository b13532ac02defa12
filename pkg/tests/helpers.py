"""Generators and independent oracles shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

import sympy

from coalrel import (
    FinSetRelation,
    RatMatrix,
    diagonal_relation,
    divided_power_coalgebra,
    generate_sub_bicomodule,
    grouplike_coalgebra,
    matrix_coalgebra,
    relation_from_kappa,
    relation_from_subspace,
)
from coalrel.catalog import path_coalgebra3

FIXTURE_COALGEBRAS = [
    path_coalgebra3(),
    grouplike_coalgebra("u"),
    grouplike_coalgebra("ab"),
    grouplike_coalgebra("abc"),
    divided_power_coalgebra(3),
    matrix_coalgebra(2),
]


def random_matrix(rng: random.Random, rows: int, cols: int, density: float = 0.5, bound: int = 3) -> RatMatrix:
    entries = {}
    for i in range(rows):
        for j in range(cols):
            if rng.random() < density:
                num = rng.randint(-bound, bound)
                den = rng.choice([1, 1, 1, 2, 3])
                entries[(i, j)] = Fraction(num, den)
    return RatMatrix.from_entries(rows, cols, entries)


def random_relation(rng: random.Random):
    """A valid relation: a random generated sub-bicomodule of C*C with either
    its inclusion or the map induced by a random functional."""
    c = rng.choice(FIXTURE_COALGEBRAS)
    if rng.random() < 0.1:
        rel = diagonal_relation(c)
    else:
        n2 = c.dim ** 2
        k = rng.randint(1, 2)
        cols = []
        for _ in range(k):
            col = [0] * n2
            for idx in rng.sample(range(n2), rng.randint(1, min(3, n2))):
                col[idx] = rng.choice([-2, -1, 1, 1, 2])
            cols.append(col)
        w = generate_sub_bicomodule(c, RatMatrix.from_columns(cols, rows=n2))
        rel = relation_from_subspace(c, w)
    if rng.random() < 0.4:
        kappa = RatMatrix.from_rows([[rng.randint(-2, 2) for _ in range(rel.dim)]], cols=rel.dim)
        rel = relation_from_kappa(rel.bicomodule, kappa)
    return rel


def random_set_relation(rng: random.Random, max_size: int = 6) -> FinSetRelation:
    n = rng.randint(1, max_size)
    p = rng.choice([0.1, 0.3, 0.5])
    els = [str(i) for i in range(1, n + 1)]
    pairs = [(a, b) for a in els for b in els if rng.random() < p]
    return FinSetRelation.of(els, pairs)


def to_sympy(m: RatMatrix) -> sympy.Matrix:
    return sympy.Matrix(m.rows, m.cols, lambda i, j: sympy.Rational(m[i, j].numerator, m[i, j].denominator))


def sympy_rank(m: RatMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return to_sympy(m).rank()
