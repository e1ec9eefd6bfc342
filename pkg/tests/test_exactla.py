from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zinbiel_lab.errors import DimensionMismatch, InputError, SingularMap
from zinbiel_lab.exactla import (
    Matrix,
    Subspace,
    determinant,
    format_rational,
    inverse,
    nullspace,
    parse_rational,
    rank,
    rref,
    solve_coordinates,
)

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def vectors(size: int):
    return st.lists(small_fractions, min_size=size, max_size=size).map(tuple)


def test_parse_rational_forms():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-4") == Fraction(-4)
    assert parse_rational(" 7 / 2 ") == Fraction(7, 2)
    assert parse_rational(5) == Fraction(5)


@pytest.mark.parametrize("text", ["1/0", "abc", "1.5", "", "1/-2", "2//3"])
def test_parse_rational_rejects(text):
    with pytest.raises(InputError):
        parse_rational(text)


def test_parse_rational_rejects_floats_and_bools():
    with pytest.raises(InputError):
        parse_rational(0.5)
    with pytest.raises(InputError):
        parse_rational(True)


def test_format_rational_is_canonical():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-3, 9)) == "-1/3"


@given(small_fractions)
def test_format_then_parse_is_identity(x):
    assert parse_rational(format_rational(x)) == x


def test_rref_and_rank():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(m) == 2
    assert rref(m).to_rows() == [
        (Fraction(1), Fraction(0), Fraction(1)),
        (Fraction(0), Fraction(1), Fraction(1)),
        (Fraction(0), Fraction(0), Fraction(0)),
    ]


def test_nullspace_is_annihilated():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6]])
    basis = nullspace(m)
    assert len(basis) == 2
    for v in basis:
        assert not any(m.apply(v))


def test_determinant_and_inverse():
    m = Matrix.from_rows([[2, 1], [7, 4]])
    assert determinant(m) == 1
    assert (m @ inverse(m)) == Matrix.identity(2)


def test_inverse_of_singular_matrix_raises():
    with pytest.raises(SingularMap):
        inverse(Matrix.from_rows([[1, 2], [2, 4]]))


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        Matrix.from_rows([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        Matrix.identity(2) @ Matrix.identity(3)
    with pytest.raises(DimensionMismatch):
        determinant(Matrix.from_rows([[1, 2, 3]]))


def test_nilpotent_power():
    shift = Matrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert not shift.power(2).is_zero()
    assert shift.power(3).is_zero()


def test_solve_coordinates():
    rows = [(1, 0, 1), (0, 1, 1)]
    assert solve_coordinates(rows, (2, 3, 5)) == (Fraction(2), Fraction(3))
    assert solve_coordinates(rows, (0, 0, 1)) is None
    assert solve_coordinates([], (0, 0, 0)) == ()


def test_subspace_canonical_form():
    u = Subspace.span([(1, 1, 0), (2, 2, 0), (0, 1, 0)], 3)
    v = Subspace.span([(1, 0, 0), (0, 3, 0)], 3)
    assert u == v
    assert u.dim == 2
    assert u.contains((5, -7, 0))
    assert not u.contains((0, 0, 1))


def test_subspace_zero_and_full():
    zero, full = Subspace.zero(3), Subspace.full(3)
    assert zero.is_zero() and zero.is_subspace_of(full)
    assert zero + full == full
    assert zero.intersection(full) == zero
    assert full.orthogonal() == zero


def test_ambient_mismatch():
    with pytest.raises(DimensionMismatch):
        Subspace.full(2) + Subspace.full(3)
    with pytest.raises(DimensionMismatch):
        Subspace.full(2).contains((1, 2, 3))


@given(st.lists(vectors(4), max_size=4), st.lists(vectors(4), max_size=4))
def test_dimension_formula(us, vs):
    u, v = Subspace.span(us, 4), Subspace.span(vs, 4)
    assert (u + v).dim + u.intersection(v).dim == u.dim + v.dim
    assert u.intersection(v).is_subspace_of(u)
    assert u.is_subspace_of(u + v)


@given(st.lists(vectors(3), min_size=1, max_size=5))
def test_rank_equals_span_dimension(rows):
    assert rank(Matrix.from_rows(rows, 3)) == Subspace.span(rows, 3).dim


@given(st.lists(vectors(3), min_size=1, max_size=5).flatmap(lambda rows: st.tuples(st.just(rows), st.permutations(rows))))
def test_rank_ignores_row_order(pair):
    rows, shuffled = pair
    assert rank(Matrix.from_rows(shuffled, 3)) == rank(Matrix.from_rows(rows, 3))
