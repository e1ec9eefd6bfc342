"""
Annihilators, ideals and the homogeneous annihilator construction.
"""

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import ConstraintViolation, InputError, StructureError
from .exactla import Matrix, Subspace, nullspace, unit_vector
from .series import even_chain, even_part, odd_part, product_subspace
from .superalg import SuperAlgebra, SuperElement


def graded_dims(algebra: SuperAlgebra, space: Subspace) -> tuple:
    """(dim U ∩ Z0, dim U ∩ Z1)"""
    return space.intersection(even_part(algebra)).dim, space.intersection(odd_part(algebra)).dim


def _kernel_of_stack(algebra: SuperAlgebra, matrices: list) -> Subspace:
    rows = [row for matrix in matrices for row in matrix.to_rows()]
    return Subspace.span(nullspace(Matrix.from_rows(rows, algebra.dim)), algebra.dim)


def left_annihilator_of(algebra: SuperAlgebra, space: Subspace) -> Subspace:
    """{x : x u = 0 for all u in U}"""
    return _kernel_of_stack(algebra, [algebra.right_matrix(u) for u in space.vectors()])


def right_annihilator_of(algebra: SuperAlgebra, space: Subspace) -> Subspace:
    """{x : u x = 0 for all u in U}"""
    return _kernel_of_stack(algebra, [algebra.left_matrix(u) for u in space.vectors()])


@dataclass(frozen=True)
class AnnihilatorReport:
    left: Subspace
    right: Subspace
    two_sided: Subspace

    def to_dict(self, algebra: SuperAlgebra) -> dict:
        return {
            name: list(graded_dims(algebra, space))
            for name, space in (("left", self.left), ("right", self.right), ("two_sided", self.two_sided))
        }


def annihilators(algebra: SuperAlgebra) -> AnnihilatorReport:
    whole = Subspace.full(algebra.dim)
    left = left_annihilator_of(algebra, whole)
    right = right_annihilator_of(algebra, whole)
    return AnnihilatorReport(left, right, left.intersection(right))


def right_annihilator(algebra: SuperAlgebra, a: SuperElement) -> Subspace:
    """RC(a) = {x : a x = 0}."""
    return Subspace.span(nullspace(algebra.left_matrix(a.coords)), algebra.dim)


def rc_monotonicity_check(algebra: SuperAlgebra, a1: SuperElement, a2: SuperElement) -> bool:
    """RC(a1) ⊆ RC(a1 a2) for homogeneous a1, a2."""
    a1.parity()
    a2.parity()
    return right_annihilator(algebra, a1).is_subspace_of(right_annihilator(algebra, algebra.multiply(a1, a2)))


def _annihilates_left(algebra: SuperAlgebra, coords: tuple) -> bool:
    return all(not any(algebra.multiply_coords(coords, unit_vector(algebra.dim, k))) for k in range(algebra.dim))


def _annihilates_right(algebra: SuperAlgebra, coords: tuple) -> bool:
    return all(not any(algebra.multiply_coords(unit_vector(algebra.dim, k), coords)) for k in range(algebra.dim))


def find_left_annihilating_homogeneous(
    algebra: SuperAlgebra, log: Optional[Callable[[str], None]] = None
) -> SuperElement:
    """Homogeneous e != 0 with eZ = 0.

    Seeds e from the last nonzero power of the even part (or the first odd
    basis vector when there is no even part) and replaces e by e*f_j while
    some odd basis vector f_j gives a nonzero product.
    """
    log = log or (lambda msg: None)
    if algebra.dim == 0:
        raise InputError("The zero-dimensional algebra has no nonzero elements")
    if algebra.n:
        top = [term for term in even_chain(algebra) if not term.is_zero()][-1]
        current = top.vectors()[0]
        log(f"Seed from Z0^{len([t for t in even_chain(algebra) if not t.is_zero()])}: {algebra.element(current)}")
    else:
        current = unit_vector(algebra.dim, 0)
        log(f"No even part, seed {algebra.element(current)}")

    steps = 0
    changed = True
    while changed:
        changed = False
        for j in algebra.odd_positions():
            product = algebra.multiply_coords(current, unit_vector(algebra.dim, j))
            if any(product):
                log(f"  e*{algebra.label(j)} != 0, replacing e")
                current = product
                changed = True
                steps += 1
                break
        if steps > algebra.dim + 1:
            raise StructureError("Annihilator loop did not terminate; the input is not a Zinbiel superalgebra")

    if not _annihilates_left(algebra, current):
        raise StructureError(f"{algebra.element(current)} does not annihilate Z from the left")
    return algebra.element(current)


def left_product_ideal(algebra: SuperAlgebra, ideal: Subspace) -> Subspace:
    """Z I"""
    return product_subspace(algebra, Subspace.full(algebra.dim), ideal)


def is_right_ideal(algebra: SuperAlgebra, ideal: Subspace) -> bool:
    return product_subspace(algebra, ideal, Subspace.full(algebra.dim)).is_subspace_of(ideal)


def is_left_ideal(algebra: SuperAlgebra, ideal: Subspace) -> bool:
    return left_product_ideal(algebra, ideal).is_subspace_of(ideal)


def is_ideal(algebra: SuperAlgebra, ideal: Subspace) -> bool:
    return is_right_ideal(algebra, ideal) and is_left_ideal(algebra, ideal)


@dataclass(frozen=True)
class IdealCertificate:
    element: SuperElement
    annihilates_left: bool
    annihilates_right: bool
    is_ideal: bool

    def to_dict(self) -> dict:
        return {
            "element": str(self.element),
            "parity": "even" if any(self.element.even) else "odd",
            "eZ_zero": self.annihilates_left,
            "Ze_zero": self.annihilates_right,
            "is_ideal": self.is_ideal,
        }


def minimal_graded_ideal(algebra: SuperAlgebra) -> tuple:
    """One-dimensional graded ideal spanned by a homogeneous element of Ann(Z)."""
    if algebra.dim == 0:
        raise InputError("The zero-dimensional algebra has no nonzero ideals")
    ann = annihilators(algebra).two_sided
    if ann.is_zero():
        raise StructureError("Ann(Z) = 0; the input is not a nilpotent superalgebra")
    even_ann = ann.intersection(even_part(algebra))
    chosen = even_ann if not even_ann.is_zero() else ann.intersection(odd_part(algebra))
    if chosen.is_zero():
        raise StructureError("Ann(Z) has no homogeneous element")
    coords = chosen.vectors()[0]
    ideal = Subspace.span([coords], algebra.dim)
    certificate = IdealCertificate(
        element=algebra.element(coords),
        annihilates_left=_annihilates_left(algebra, coords),
        annihilates_right=_annihilates_right(algebra, coords),
        is_ideal=is_ideal(algebra, ideal),
    )
    return ideal, certificate


def type_n1_structure_check(algebra: SuperAlgebra) -> bool:
    """Z0 Z1 = Z1 Z0 = 0 and Z1 Z1 ⊆ Ann_L(Z0), for odd dimension 1."""
    if algebra.m != 1:
        raise ConstraintViolation(f"odd dimension must be 1, got {algebra.m}")
    z0, z1 = even_part(algebra), odd_part(algebra)
    if not product_subspace(algebra, z0, z1).is_zero():
        return False
    if not product_subspace(algebra, z1, z0).is_zero():
        return False
    return product_subspace(algebra, z1, z1).is_subspace_of(left_annihilator_of(algebra, z0))
