import pytest

from zinbiel_lab.catalog import build_family
from zinbiel_lab.errors import ConstraintViolation, InputError, NotHomogeneous, StructureError
from zinbiel_lab.exactla import Subspace
from zinbiel_lab.structure import (
    annihilators,
    find_left_annihilating_homogeneous,
    graded_dims,
    is_ideal,
    is_left_ideal,
    minimal_graded_ideal,
    rc_monotonicity_check,
    right_annihilator,
    type_n1_structure_check,
)
from zinbiel_lab.superalg import SuperAlgebra, parse_element

IDEMPOTENT = SuperAlgebra.from_rules(1, 0, {("e1", "e1"): {"e1": 1}})


def test_annihilators_of_z33():
    algebra = build_family("z33")
    report = annihilators(algebra).to_dict(algebra)
    assert report == {"left": [1, 1], "right": [1, 1], "two_sided": [1, 1]}


def test_annihilators_of_null_filiform_algebra_are_the_top():
    algebra = build_family("NullFiliformAlg", n=5)
    report = annihilators(algebra)
    top = Subspace.span([algebra.basis_element(4).coords], 5)
    assert report.left == top and report.right == top and report.two_sided == top


def test_graded_dims_of_mixed_subspace():
    algebra = build_family("z39")
    space = Subspace.span([(1, 0, 0), (0, 1, 1)], 3)
    assert graded_dims(algebra, space) == (1, 0)


def test_right_annihilator():
    algebra = build_family("z35")
    f1 = parse_element("f1", 1, 2)
    # f1 e1 = f2 and f1 f1 = e1, so only f2 is killed from the right
    assert right_annihilator(algebra, f1) == Subspace.span([(0, 0, 1)], 3)


def test_rc_monotonicity_on_basis_pairs(catalog_algebra):
    basis = [catalog_algebra.basis_element(p) for p in range(catalog_algebra.dim)]
    assert all(rc_monotonicity_check(catalog_algebra, a, b) for a in basis for b in basis)


def test_rc_monotonicity_needs_homogeneous_elements():
    algebra = build_family("z35")
    with pytest.raises(NotHomogeneous):
        rc_monotonicity_check(algebra, parse_element("e1+f1", 1, 2), algebra.basis_element(1))


def test_left_annihilating_element_in_null_filiform_super():
    algebra = build_family("NullFiliformSuper", n=2, m=3)
    assert str(find_left_annihilating_homogeneous(algebra)) == "e2"


def test_left_annihilating_element_follows_odd_products():
    # e1 f1 = f2 moves the seed e1 into the odd part
    assert str(find_left_annihilating_homogeneous(build_family("z38"))) == "f2"


def test_left_annihilating_element_is_logged():
    messages = []
    find_left_annihilating_homogeneous(build_family("z38"), log=messages.append)
    assert messages[0].startswith("Seed from Z0^1")
    assert any("f1" in message for message in messages[1:])


def test_left_annihilating_element_exists_in_catalog(catalog_algebra):
    element = find_left_annihilating_homogeneous(catalog_algebra)
    assert not element.is_zero()
    element.parity()
    for p in range(catalog_algebra.dim):
        assert catalog_algebra.multiply(element, catalog_algebra.basis_element(p)).is_zero()


def test_left_annihilating_element_rejects_non_nilpotent_input():
    with pytest.raises(StructureError):
        find_left_annihilating_homogeneous(IDEMPOTENT)
    with pytest.raises(InputError):
        find_left_annihilating_homogeneous(SuperAlgebra(0, 0))


def test_minimal_graded_ideal_of_null_filiform_super():
    ideal, certificate = minimal_graded_ideal(build_family("NullFiliformSuper", n=2, m=3))
    assert ideal.dim == 1
    assert certificate.to_dict() == {
        "element": "f3",
        "parity": "odd",
        "eZ_zero": True,
        "Ze_zero": True,
        "is_ideal": True,
    }


def test_minimal_graded_ideal_prefers_even_part():
    _, certificate = minimal_graded_ideal(build_family("z34"))
    assert str(certificate.element) == "e1"


def test_minimal_graded_ideal_in_catalog(catalog_algebra):
    ideal, certificate = minimal_graded_ideal(catalog_algebra)
    assert certificate.annihilates_left and certificate.annihilates_right and certificate.is_ideal
    assert is_ideal(catalog_algebra, ideal)
    assert sum(graded_dims(catalog_algebra, ideal)) == 1


def test_minimal_graded_ideal_needs_a_nonzero_annihilator():
    with pytest.raises(StructureError):
        minimal_graded_ideal(IDEMPOTENT)
    with pytest.raises(InputError):
        minimal_graded_ideal(SuperAlgebra(0, 0))


def test_ideal_checks():
    algebra = build_family("z35")
    assert not is_left_ideal(algebra, Subspace.span([(0, 1, 0)], 3))
    assert is_ideal(algebra, Subspace.span([(1, 0, 0), (0, 0, 1)], 3))


def test_type_n1_structure():
    assert type_n1_structure_check(build_family("z39"))
    not_split = SuperAlgebra.from_rules(1, 1, {("f1", "e1"): {"f1": 1}})
    assert not type_n1_structure_check(not_split)
    with pytest.raises(ConstraintViolation):
        type_n1_structure_check(build_family("z33"))
