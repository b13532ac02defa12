from fractions import Fraction

import pytest

from coalrel import (
    Coalgebra,
    RatMatrix,
    divided_power_coalgebra,
    flip,
    grouplike_coalgebra,
    is_cocommutative,
    kron,
    matrix_coalgebra,
    validate_coalgebra,
)
from coalrel.catalog import path_coalgebra3
from coalrel.coalg import format_vector, tensor_names
from coalrel.validation import MalformedError
from helpers import FIXTURE_COALGEBRAS


@pytest.mark.parametrize("c", FIXTURE_COALGEBRAS, ids=lambda c: "".join(c.basis_names))
def test_fixture_coalgebras_valid(c):
    assert validate_coalgebra(c).valid


def test_path_coalgebra_delta_column():
    c = path_coalgebra3()
    assert c.delta.column_dict(1) == {1: 1, 5: 1}


def test_changed_counit_breaks_counit_laws():
    c = path_coalgebra3()
    bad = Coalgebra(c.basis_names, c.delta, RatMatrix.from_rows([[1, 1, 1]]))
    report = validate_coalgebra(bad)
    assert not report.valid
    assert report.checks["coassociativity"]
    assert not report.checks["left_counit"] and not report.checks["right_counit"]
    assert set(report.failed) == {"left_counit", "right_counit"}


def test_broken_coassociativity_is_reported():
    # (delta*id) delta(y) has x*x*y, (id*delta) delta(y) has y*x*x
    c = Coalgebra.from_tables(
        "xy", {"x": [(1, "x", "x")], "y": [(1, "y", "y"), (1, "x", "x")]}, {"x": 1, "y": 1}
    )
    report = validate_coalgebra(c)
    assert not report.checks["coassociativity"]
    assert "coassociativity" in report.notes


def test_shape_errors():
    with pytest.raises(MalformedError):
        Coalgebra(("x",), RatMatrix.zeros(2, 1), RatMatrix.from_rows([[1]]))
    with pytest.raises(MalformedError):
        Coalgebra(("x",), RatMatrix.from_rows([[1]]), RatMatrix.zeros(1, 2))
    with pytest.raises(MalformedError):
        Coalgebra.from_tables("xy", {"x": [(1, "x", "x")]}, {"x": 1, "y": 1})


def test_cocommutativity():
    assert is_cocommutative(grouplike_coalgebra("ab"))
    assert is_cocommutative(grouplike_coalgebra("u"))
    assert is_cocommutative(divided_power_coalgebra(4))
    assert not is_cocommutative(path_coalgebra3())
    assert not is_cocommutative(matrix_coalgebra(2))


@pytest.mark.parametrize("n, m", [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2)])
def test_flip_involution_pair(n, m):
    assert flip(n, m) @ flip(m, n) == RatMatrix.identity(n * m)
    f = flip(n, m)
    for i in range(f.rows):
        assert list(f.row_dict(i).values()) == [1]


def test_flip_small_cases():
    assert flip(1, 4) == RatMatrix.identity(4)
    f = flip(2, 2)
    assert [f.row_dict(i) for i in range(4)] == [{0: 1}, {2: 1}, {1: 1}, {3: 1}]


def test_flip_acts_on_kron():
    a = RatMatrix.from_rows([[1, 2], [0, 1]])
    b = RatMatrix.from_rows([[3], [1], [2]])
    assert flip(2, 3) @ kron(a, b) == kron(b, a) @ flip(2, 1)


@pytest.mark.parametrize("c", FIXTURE_COALGEBRAS, ids=lambda c: "".join(c.basis_names))
def test_counit_entrywise(c):
    # contracting either leg of delta(e_i) with eps gives back e_i
    n = c.dim
    for i in range(n):
        col = c.delta.column_dict(i)
        left = {}
        right = {}
        for idx, v in col.items():
            a, b = divmod(idx, n)
            right[a] = right.get(a, 0) + v * c.eps[0, b]
            left[b] = left.get(b, 0) + c.eps[0, a] * v
        assert {k: v for k, v in left.items() if v} == {i: 1}
        assert {k: v for k, v in right.items() if v} == {i: 1}


def test_matrix_coalgebra_names_and_counit():
    c = matrix_coalgebra(2)
    assert c.basis_names == ("e00", "e01", "e10", "e11")
    assert c.eps == RatMatrix.from_rows([[1, 0, 0, 1]])


def test_format_vector():
    names = tensor_names("xy", "xy")
    assert names == ["x*x", "x*y", "y*x", "y*y"]
    assert format_vector({1: 1, 2: -1}, names) == "x*y - y*x"
    assert format_vector({0: Fraction(-1, 2), 3: 2}, names) == "-1/2 x*x + 2 y*y"
    assert format_vector({}, names) == "0"
