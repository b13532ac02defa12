from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coalrel.exactlinalg import (
    RatMatrix,
    Subspace,
    hstack,
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
    vstack,
)
from helpers import sympy_rank, to_sympy

small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def matrices(draw, rows=None, cols=None, max_dim=5):
    r = draw(st.integers(0, max_dim)) if rows is None else rows
    c = draw(st.integers(0, max_dim)) if cols is None else cols
    sparse = draw(st.booleans())
    values = st.one_of(st.just(Fraction(0)), small_rationals) if sparse else small_rationals
    data = draw(st.lists(st.lists(values, min_size=c, max_size=c), min_size=r, max_size=r))
    return RatMatrix.from_rows(data, cols=c)


# -- rationals ------------------------------------------------------------------


@pytest.mark.parametrize(
    "text, value",
    [("7", Fraction(7)), ("-3/2", Fraction(-3, 2)), ("+1/4", Fraction(1, 4)), ("4/6", Fraction(2, 3))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1.5", "1/0", "x", "3/-2", ""])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_float_entries_rejected():
    with pytest.raises(TypeError):
        RatMatrix.from_rows([[0.5]])


# -- rref -------------------------------------------------------------------------


def test_rref_zero():
    m, piv = rref(RatMatrix.zeros(2, 2))
    assert m == RatMatrix.zeros(2, 2)
    assert piv == []


def test_rref_identity():
    m, piv = rref(RatMatrix.identity(2))
    assert m == RatMatrix.identity(2)
    assert piv == [0, 1]


def test_rref_hand_example():
    m, piv = rref(RatMatrix.from_rows([[2, 4], [1, 2]]))
    assert m == RatMatrix.from_rows([[1, 2], [0, 0]])
    assert piv == [0]


def test_rref_fractional():
    m, piv = rref(RatMatrix.from_rows([[0, 3, 1], [2, 0, 1]]))
    assert m == RatMatrix.from_rows([[1, 0, "1/2"], [0, 1, "1/3"]])
    assert piv == [0, 1]


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_matches_sympy(m):
    ours, piv = rref(m)
    if m.rows and m.cols:
        ref, ref_piv = to_sympy(m).rref()
        assert list(ref_piv) == piv
        assert to_sympy(ours) == ref


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_idempotent(m):
    once, piv = rref(m)
    twice, piv2 = rref(once)
    assert once == twice and piv == piv2


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).dim == m.cols
    assert rank(m) == sympy_rank(m)


# -- kernel / image ----------------------------------------------------------------


def test_kernel_identity():
    assert kernel_basis(RatMatrix.identity(3)).dim == 0


def test_kernel_zero():
    k = kernel_basis(RatMatrix.zeros(2, 3))
    assert k.dim == 3 and k == Subspace.full(3)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_vectors_annihilated(m):
    k = kernel_basis(m)
    assert (m @ k.basis).is_zero()


def test_image_zero_and_full():
    assert image_basis(RatMatrix.zeros(3, 2)).dim == 0
    assert image_basis(RatMatrix.identity(3)) == Subspace.full(3)


def test_image_is_canonical():
    a = RatMatrix.from_columns([[1, 1, 0], [0, 1, 1]])
    b = RatMatrix.from_columns([[1, 2, 1], [2, 2, 0], [1, 0, -1]])
    assert image_basis(a) == image_basis(b)
    assert image_basis(a).basis == RatMatrix.from_columns([[1, 0, -1], [0, 1, 1]])


# -- solve_right ---------------------------------------------------------------


def test_solve_identity():
    b = RatMatrix.from_rows([[1, "2/3"], [-4, 0]])
    assert solve_right(RatMatrix.identity(2), b) == b


def test_solve_zero_has_no_solution():
    assert solve_right(RatMatrix.zeros(2, 2), RatMatrix.from_rows([[1], [0]])) is None


def test_solve_sets_free_variables_to_zero():
    a = RatMatrix.from_rows([[1, 1]])
    assert solve_right(a, RatMatrix.from_rows([[3]])) == RatMatrix.from_rows([[3], [0]])


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_solve_right_sound(data):
    a = data.draw(matrices(max_dim=4))
    b = data.draw(matrices(rows=a.rows, max_dim=3))
    x = solve_right(a, b)
    if x is None:
        img = image_basis(a)
        assert any(not img.contains(b.take_columns([j])) for j in range(b.cols))
    else:
        assert a @ x == b


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_solve_right_complete(data):
    # any b built in the image must be solvable
    a = data.draw(matrices(max_dim=4))
    y = data.draw(matrices(rows=a.cols, max_dim=3))
    x = solve_right(a, a @ y)
    assert x is not None and a @ x == a @ y


# -- subspaces ------------------------------------------------------------------


def test_subspace_leq_reflexive_and_zero():
    s = image_basis(RatMatrix.from_columns([[1, 2, 0]]))
    assert subspace_leq(s, s)
    assert subspace_leq(Subspace.zero(3), s)


def test_subspace_containment_example():
    # ambient C = span(x, y, z): span{y} <= span{y, z - x}
    y = RatMatrix.from_columns([[0, 1, 0]])
    big = image_basis(RatMatrix.from_columns([[0, 1, 0], [-1, 0, 1]]))
    assert subspace_leq(image_basis(y), big)
    assert member(RatMatrix.column_vector([1, 5, -1]), big)
    assert not member(RatMatrix.column_vector([1, 0, 0]), big)


def test_subspace_sum():
    a = image_basis(RatMatrix.from_columns([[1, 0, 0]]))
    b = image_basis(RatMatrix.from_columns([[1, 1, 0]]))
    s = subspace_sum(a, b)
    assert s.dim == 2 and a <= s and b <= s and (a + b) == s


def test_subspace_dimension_mismatch():
    with pytest.raises(ValueError):
        subspace_leq(Subspace.zero(2), Subspace.zero(3))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_mutual_containment_means_identical(data):
    m = data.draw(matrices(rows=4, max_dim=4))
    t = data.draw(matrices(rows=m.cols, cols=m.cols))
    s1 = image_basis(m)
    s2 = image_basis(m @ t)
    if s1 <= s2 and s2 <= s1:
        assert s1.basis == s2.basis
    else:
        assert s1 != s2


# -- kron ---------------------------------------------------------------------------


def test_kron_identity():
    assert kron(RatMatrix.identity(2), RatMatrix.identity(3)) == RatMatrix.identity(6)


def test_kron_zero():
    a = RatMatrix.from_rows([[1, 2], [3, 4]])
    assert kron(a, RatMatrix.zeros(2, 3)) == RatMatrix.zeros(4, 6)


def test_kron_elementary():
    e00 = RatMatrix.from_entries(2, 2, {(0, 0): 1})
    e11 = RatMatrix.from_entries(2, 2, {(1, 1): 1})
    k = kron(e00, e11)
    assert list(k.entries()) == [(1, 1, Fraction(1))]


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_kron_mixed_product(data):
    a = data.draw(matrices(max_dim=3))
    b = data.draw(matrices(max_dim=3))
    c = data.draw(matrices(rows=a.cols, max_dim=3))
    d = data.draw(matrices(rows=b.cols, max_dim=3))
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


def test_stacking_and_slicing():
    a = RatMatrix.from_rows([[1, 2], [3, 4]])
    assert hstack(a, a).take_columns([2, 3]) == a
    assert vstack(a, a).take_rows([2, 3]) == a
    assert a.T == RatMatrix.from_rows([[1, 3], [2, 4]])
    assert (a - a).is_zero() and a + a == 2 * a and -a == a.scale(-1)
