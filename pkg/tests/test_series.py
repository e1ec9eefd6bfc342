import pytest

from zinbiel_lab.catalog import build_family
from zinbiel_lab.series import (
    derived_series,
    even_square,
    is_null_filiform,
    is_solvable,
    nilpotency_index,
    power_sequence,
)
from zinbiel_lab.superalg import SuperAlgebra


@pytest.mark.parametrize("d", range(3, 12))
def test_null_filiform_super_dimension_law(d):
    algebra = build_family("NullFiliformSuper", dim=d)
    assert power_sequence(algebra).dims()["full"] == list(range(d, -1, -1))
    assert nilpotency_index(algebra) == d + 1
    assert is_null_filiform(algebra)


def test_null_filiform_super_dim_7():
    dims = power_sequence(build_family("NullFiliformSuper", dim=7)).dims()
    assert dims["full"] == [7, 6, 5, 4, 3, 2, 1, 0]


@pytest.mark.parametrize("n", range(3, 11))
def test_null_filiform_algebra(n):
    algebra = build_family("NullFiliformAlg", n=n)
    assert nilpotency_index(algebra) == n + 1
    assert is_null_filiform(algebra)


def test_ng_filiform_is_not_null_filiform():
    algebra = build_family("NgFiliformAlg", n=6)
    assert not is_null_filiform(algebra)
    assert power_sequence(algebra).dims()["full"] == [6, 4, 3, 2, 1, 0]


def test_even_and_odd_chains_of_nf2():
    dims = power_sequence(build_family("NF2", n=6, m=4, alpha="0")).dims()
    assert dims["full"][:2] == [10, 7]
    assert dims["even"] == [6, 4, 3, 2, 1, 0]
    assert dims["odd"] == [4, 3, 2, 1, 0]


def test_non_nilpotent_chain_stabilizes():
    idempotent = SuperAlgebra.from_rules(1, 0, {("e1", "e1"): {"e1": 1}})
    sequence = power_sequence(idempotent)
    assert sequence.stabilized
    assert sequence.dims()["full"] == [1]
    assert nilpotency_index(idempotent) is None
    assert not is_solvable(idempotent)


def test_zero_algebra():
    zero = SuperAlgebra(0, 0)
    assert nilpotency_index(zero) == 1
    assert not is_null_filiform(zero)


def test_even_square():
    assert even_square(build_family("z39")).dim == 1
    assert even_square(build_family("z33")).is_zero()


def test_catalog_members_are_solvable_and_nilpotent(catalog_algebra):
    index = nilpotency_index(catalog_algebra)
    assert index is not None and index <= catalog_algebra.dim + 1
    assert is_solvable(catalog_algebra)
    assert derived_series(catalog_algebra)[-1].is_zero()
