"""
Power sequences, nilpotency and solvability.

Chains are computed on canonical subspaces of the full (n+m)-dimensional
coordinate space and stop at the first zero term or when a term repeats.
"""

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import DimensionMismatch
from .exactla import Subspace, unit_vector
from .superalg import SuperAlgebra


def even_part(algebra: SuperAlgebra) -> Subspace:
    return Subspace.span([unit_vector(algebra.dim, i) for i in algebra.even_positions()], algebra.dim)


def odd_part(algebra: SuperAlgebra) -> Subspace:
    return Subspace.span([unit_vector(algebra.dim, i) for i in algebra.odd_positions()], algebra.dim)


def product_subspace(algebra: SuperAlgebra, u: Subspace, v: Subspace) -> Subspace:
    """span{ u_i * v_j } over the canonical bases of U and V."""
    for space in (u, v):
        if space.ambient_dim != algebra.dim:
            raise DimensionMismatch(f"Subspace of ambient dimension {space.ambient_dim} in an algebra of dimension {algebra.dim}")
    left = u.vectors()
    right = v.vectors()
    return Subspace.span([algebra.multiply_coords(x, y) for x in left for y in right], algebra.dim)


def _descend(first: Subspace, step: Callable[[Subspace], Subspace]) -> tuple:
    terms = [first]
    current = first
    while not current.is_zero():
        following = step(current)
        if following == current:
            break
        terms.append(following)
        current = following
    return tuple(terms)


def _dims(chain: tuple) -> list:
    return [term.dim for term in chain]


@dataclass(frozen=True)
class PowerSequence:
    full: tuple
    even_chain: tuple
    odd_chain: tuple

    @property
    def stabilized(self) -> bool:
        """True when the full chain stopped at a nonzero term."""
        return not self.full[-1].is_zero()

    def dims(self) -> dict:
        return {"full": _dims(self.full), "even": _dims(self.even_chain), "odd": _dims(self.odd_chain)}


def full_chain(algebra: SuperAlgebra) -> tuple:
    whole = Subspace.full(algebra.dim)
    return _descend(whole, lambda term: product_subspace(algebra, whole, term))


def even_chain(algebra: SuperAlgebra) -> tuple:
    """Z0^1 = Z0, Z0^(k+1) = Z0 Z0^k."""
    z0 = even_part(algebra)
    return _descend(z0, lambda term: product_subspace(algebra, z0, term))


def odd_chain(algebra: SuperAlgebra) -> tuple:
    """Z1^1 = Z1, Z1^(k+1) = Z0 Z1^k."""
    z0 = even_part(algebra)
    return _descend(odd_part(algebra), lambda term: product_subspace(algebra, z0, term))


def power_sequence(algebra: SuperAlgebra) -> PowerSequence:
    return PowerSequence(full_chain(algebra), even_chain(algebra), odd_chain(algebra))


def even_square(algebra: SuperAlgebra) -> Subspace:
    z0 = even_part(algebra)
    return product_subspace(algebra, z0, z0)


def nilpotency_index(algebra: SuperAlgebra) -> Optional[int]:
    """Least s with Z^s = 0, or None when the chain stabilizes at a nonzero term."""
    chain = full_chain(algebra)
    if not chain[-1].is_zero():
        return None
    return len(chain)


def derived_series(algebra: SuperAlgebra) -> tuple:
    return _descend(Subspace.full(algebra.dim), lambda term: product_subspace(algebra, term, term))


def is_solvable(algebra: SuperAlgebra) -> bool:
    return derived_series(algebra)[-1].is_zero()


def is_null_filiform(algebra: SuperAlgebra) -> bool:
    if algebra.dim == 0:
        return False
    return _dims(full_chain(algebra)) == list(range(algebra.dim, -1, -1))
