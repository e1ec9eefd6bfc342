import random

import pytest

from zinbiel_lab.catalog import build_family
from zinbiel_lab.errors import ConstraintViolation, NotHomogeneous, NotNilpotent
from zinbiel_lab.exactla import Matrix
from zinbiel_lab.maps import random_graded_map, transport
from zinbiel_lab.spectra import (
    CharSequence,
    char_sequence_at,
    characteristic_sequence,
    is_filiform,
    is_p_filiform,
    jordan_blocks,
)
from zinbiel_lab.superalg import SuperAlgebra, parse_element


def e1(algebra):
    return algebra.basis_element(0)


def test_jordan_blocks():
    shift = Matrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert jordan_blocks(shift) == (3,)
    assert jordan_blocks(Matrix.zeros(2, 2)) == (1, 1)
    mixed = Matrix.from_rows([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]])
    assert jordan_blocks(mixed) == (2, 2)
    assert jordan_blocks(Matrix.zeros(0, 0)) == ()
    with pytest.raises(NotNilpotent):
        jordan_blocks(Matrix.identity(2))


def test_char_sequence_ordering():
    assert CharSequence((3, 1), (2,)) > CharSequence((2, 2), (4,))
    assert CharSequence((2, 1), (2,)) > CharSequence((2, 1), (1, 1))
    assert str(CharSequence((2,), (1, 1, 1))) == "((2) | (1,1,1))"


def test_filiform_families_at_e1(filiform_algebra):
    sequence = char_sequence_at(filiform_algebra, e1(filiform_algebra))
    assert sequence == CharSequence((filiform_algebra.n - 1, 1), (filiform_algebra.m,))


@pytest.mark.parametrize("n", range(3, 11))
def test_null_filiform_algebra_at_e1(n):
    algebra = build_family("NullFiliformAlg", n=n)
    assert char_sequence_at(algebra, e1(algebra)) == CharSequence((n,), ())


def test_null_filiform_super_2_3():
    algebra = build_family("NullFiliformSuper", n=2, m=3)
    result = characteristic_sequence(algebra)
    assert result.sequence == CharSequence((2,), (1, 1, 1))
    assert result.shared_witness
    assert result.to_dict()["c0"] == [2] and result.to_dict()["c1"] == [1, 1, 1]


def test_scan_is_deterministic():
    algebra = build_family("NF2", n=6, m=4, alpha="3/7")
    first = characteristic_sequence(algebra, seed=7, samples=30)
    second = characteristic_sequence(algebra, seed=7, samples=30)
    assert first == second
    assert first.sequence == CharSequence((5, 1), (4,))


def test_char_sequence_at_rejects_bad_elements():
    algebra = build_family("NF1", n=6, m=4)
    with pytest.raises(ConstraintViolation):
        char_sequence_at(algebra, parse_element("e3", 6, 4))
    with pytest.raises(NotHomogeneous):
        char_sequence_at(algebra, parse_element("f1", 6, 4))


def test_no_candidates_without_even_part():
    with pytest.raises(ConstraintViolation):
        characteristic_sequence(SuperAlgebra(0, 2))


def test_is_filiform_yes_for_nf_family():
    verdict = is_filiform(build_family("NF3", n=6, m=5))
    assert verdict.status == "yes"
    assert verdict.witness is not None


def test_is_filiform_no_for_null_filiform_algebra():
    verdict = is_filiform(build_family("NullFiliformAlg", n=4))
    assert verdict.status == "no"
    assert verdict.to_dict()["verdict"] == "no"


def test_is_filiform_looks_past_the_first_match():
    # C(e1) = (2,1) but e1 + q e3 acts as a single block of size 3
    algebra = SuperAlgebra.from_rules(3, 0, {("e1", "e2"): {"e3": 1}, ("e3", "e1"): {"e2": 1}})
    assert char_sequence_at(algebra, e1(algebra)) == CharSequence((2, 1), ())
    verdict = is_filiform(algebra)
    assert verdict.status == "no"
    assert char_sequence_at(algebra, verdict.witness).c0 == (3,)


def test_is_filiform_no_by_dimension_bound():
    verdict = is_filiform(SuperAlgebra(3, 0))
    assert verdict.status == "no"
    assert "Z0^2" in verdict.reason


def test_is_p_filiform():
    assert is_p_filiform(build_family("NullFiliformAlg", n=4), 0).status == "yes"
    assert is_p_filiform(build_family("NgFiliformAlg", n=6), 1).status == "yes"
    assert is_p_filiform(build_family("NullFiliformAlg", n=4), 4).status == "no"


def test_char_sequence_moves_with_transport(filiform_algebra):
    graded_map = random_graded_map(filiform_algebra.n, filiform_algebra.m, random.Random(11))
    moved = transport(filiform_algebra, graded_map)
    x = e1(filiform_algebra)
    assert char_sequence_at(moved, graded_map.apply(x)) == char_sequence_at(filiform_algebra, x)
